"""The Chevalley-Eilenberg complex C^p(g, V) and its exact cohomology.

Conventions fixed here and relied on everywhere else:

* Basis of C^p(g, V): pairs (S, a) with S a strictly increasing p-tuple
  of basis indices in lexicographic order and a a module index; the flat
  position is  lex_rank(S) * dim V + a.
* Differential (both sums, signs as displayed in the general formula):

      (d f)(x_0..x_p) =  sum_i (-1)^i x_i . f(.. x_i^ ..)
                       + sum_{i<j} (-1)^{i+j} f([x_i,x_j], .. x_i^ .. x_j^ ..)

  With trivial coefficients the 1-cochain case specialises to
  (d f)(x, y) = -f([x, y]).

`differential` assembles the matrix by scattering contributions per
output tuple; `cocycle_check` re-evaluates the sums directly on every
basis tuple without touching any assembled matrix, and serves as the
independent oracle for the assembly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .linalg import (
    Matrix,
    Subspace,
    image_basis,
    kernel_basis,
    rref,
    vec_is_zero,
    zero_vector,
)
from .lie import LieAlgebra
from .reps import Representation, trivial_rep, verify_rep


class WedgeBasis:
    """All strictly increasing p-tuples from {0..n-1} in lex order."""

    __slots__ = ("n", "p", "tuples", "rank_of")

    def __init__(self, n: int, p: int):
        if not 0 <= p <= n:
            raise ValueError(f"wedge degree {p} out of range for dimension {n}")
        self.n = n
        self.p = p
        self.tuples = list(itertools.combinations(range(n), p))
        self.rank_of = {t: r for r, t in enumerate(self.tuples)}

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)


def wedge_basis(n: int, p: int) -> WedgeBasis:
    return WedgeBasis(n, p)


def cochain_dim(n: int, p: int, m: int) -> int:
    return comb(n, p) * m if 0 <= p <= n else 0


def _insertion(k: int, rest: tuple) -> tuple | None:
    """Sorted tuple for k wedged in front of sorted `rest` and its sign.

    Returns (tuple, sign) or None when k already occurs (the wedge dies).
    """
    if k in rest:
        return None
    pos = 0
    for r in rest:
        if r < k:
            pos += 1
    merged = tuple(sorted(rest + (k,)))
    return merged, (-1) ** pos


def differential(L: LieAlgebra, V: Representation, p: int) -> Matrix:
    """Matrix of d : C^p(g, V) -> C^{p+1}(g, V) in the fixed layout."""
    if verify_rep(V):
        raise ValueError("coefficient module fails the homomorphism law")
    n, m = L.dim, V.dim
    if not 0 <= p <= n:
        raise ValueError(f"degree {p} out of range")
    if p == n:
        return Matrix.zeros(0, cochain_dim(n, p, m))
    src = wedge_basis(n, p)
    dst = wedge_basis(n, p + 1)
    rows = [zero_vector(len(src) * m) for _ in range(len(dst) * m)]
    for T in dst.tuples:
        row_base = dst.rank_of[T] * m
        for i, ti in enumerate(T):
            sub = T[:i] + T[i + 1 :]
            sign = -1 if i % 2 else 1
            action = V.actions[ti]
            col_base = src.rank_of[sub] * m
            for b in range(m):
                arow = action.data[b]
                target = rows[row_base + b]
                for a in range(m):
                    if arow[a]:
                        target[col_base + a] += sign * arow[a]
        for i in range(len(T)):
            for j in range(i + 1, len(T)):
                w = L.basis_bracket(T[i], T[j])
                if vec_is_zero(w):
                    continue
                rest = T[:i] + T[i + 1 : j] + T[j + 1 :]
                pair_sign = -1 if (i + j) % 2 else 1
                for k, wk in enumerate(w):
                    if not wk:
                        continue
                    ins = _insertion(k, rest)
                    if ins is None:
                        continue
                    merged, ins_sign = ins
                    coeff = pair_sign * ins_sign * wk
                    col_base = src.rank_of[merged] * m
                    for b in range(m):
                        rows[row_base + b][col_base + b] += coeff
    return Matrix(len(dst) * m, len(src) * m, rows)


def _value_at(f, rank: int, m: int) -> list:
    """Module value of a flat cochain vector at the tuple of given lex rank."""
    return list(f[rank * m : rank * m + m])


def _permutation_sign(seq) -> int:
    """Parity of the permutation sorting seq (distinct entries)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def koszul_apply(L: LieAlgebra, V: Representation, p: int, f) -> list:
    """(d f) evaluated tuple by tuple, independent of `differential`.

    The alternating value of f on an arbitrary basis-index sequence is
    obtained by a permutation-parity lookup, so this path shares no
    assembly code with the matrix construction.
    """
    n, m = L.dim, V.dim
    src = wedge_basis(n, p)
    if len(f) != len(src) * m:
        raise ValueError("cochain vector has the wrong length")
    if p == n:
        return []

    def value_on(indices) -> list:
        if len(set(indices)) != len(indices):
            return zero_vector(m)
        sign = _permutation_sign(indices)
        val = _value_at(f, src.rank_of[tuple(sorted(indices))], m)
        return val if sign == 1 else [-x for x in val]

    dst = wedge_basis(n, p + 1)
    out = []
    for T in dst.tuples:
        acc = zero_vector(m)
        for i, ti in enumerate(T):
            fv = value_on(T[:i] + T[i + 1 :])
            if not vec_is_zero(fv):
                av = V.act(ti, fv)
                if i % 2:
                    av = [-x for x in av]
                acc = [x + y for x, y in zip(acc, av)]
        for i in range(len(T)):
            for j in range(i + 1, len(T)):
                w = L.basis_bracket(T[i], T[j])
                rest = T[:i] + T[i + 1 : j] + T[j + 1 :]
                for k, wk in enumerate(w):
                    if not wk:
                        continue
                    fv = value_on((k,) + rest)
                    if vec_is_zero(fv):
                        continue
                    c = wk if (i + j) % 2 == 0 else -wk
                    acc = [x + c * y for x, y in zip(acc, fv)]
        out.extend(acc)
    return out


def cocycle_check(f, L: LieAlgebra, V: Representation, p: int) -> list:
    """Nonzero Koszul defects of f, listed per (p+1)-tuple.

    Empty iff f is a p-cocycle.  Direct evaluation; never consults the
    assembled differential matrix.
    """
    n, m = L.dim, V.dim
    image = koszul_apply(L, V, p, f)
    defects = []
    for r, T in enumerate(wedge_basis(n, p + 1).tuples if p < n else []):
        val = image[r * m : r * m + m]
        if not vec_is_zero(val):
            defects.append((T, val))
    return defects


@dataclass(frozen=True)
class CochainComplex:
    """Spaces C^0..C^n with differentials D_p : C^p -> C^{p+1} (D_n = 0)."""

    algebra: LieAlgebra
    module: Representation
    dims: tuple[int, ...]
    differentials: tuple[Matrix, ...]

    def dim(self, p: int) -> int:
        return self.dims[p] if 0 <= p < len(self.dims) else 0

    def differential_at(self, p: int) -> Matrix:
        return self.differentials[p]


def build_complex(L: LieAlgebra, V: Representation) -> CochainComplex:
    """All differentials of C^*(g, V); d o d = 0 is verified exactly."""
    n, m = L.dim, V.dim
    dims = tuple(cochain_dim(n, p, m) for p in range(n + 1))
    diffs = tuple(differential(L, V, p) for p in range(n + 1))
    C = CochainComplex(algebra=L, module=V, dims=dims, differentials=diffs)
    if not verify_chain(C):
        raise AssertionError("d o d != 0; differential assembly is broken")
    return C


def verify_chain(C: CochainComplex) -> bool:
    """True iff D_{p+1} . D_p = 0 exactly for every degree."""
    for p in range(len(C.differentials) - 1):
        if not C.differentials[p + 1].matmul(C.differentials[p]).is_zero():
            return False
    return True


@dataclass(frozen=True)
class DegreeReport:
    p: int
    dim_c: int
    dim_z: int
    dim_b: int
    dim_h: int
    cocycles: Subspace | None = None
    coboundaries: Subspace | None = None
    class_reps: tuple | None = None


@dataclass(frozen=True)
class CohomologyReport:
    algebra: LieAlgebra
    module: Representation
    degrees: tuple[DegreeReport, ...]

    def dim_h(self, p: int) -> int:
        return self.degrees[p].dim_h if 0 <= p < len(self.degrees) else 0

    @property
    def h_dims(self) -> tuple[int, ...]:
        return tuple(d.dim_h for d in self.degrees)


def _class_representatives(z: Subspace, b: Subspace) -> tuple:
    """Kernel basis rows reduced mod the image's echelon basis, re-echeloned."""
    residues = [b.reduce(row) for row in z.basis.data]
    reduced = Subspace.from_vectors(z.ambient_dim, [r for r in residues if any(r)])
    return tuple(list(row) for row in reduced.basis.data)


def cohomology(L: LieAlgebra, V: Representation, representatives: bool = False) -> CohomologyReport:
    """Exact dim C/Z/B/H per degree, via rank-nullity on the differentials."""
    C = build_complex(L, V)
    n = L.dim
    ranks = [rref(C.differentials[p])[1] for p in range(n + 1)]
    degrees = []
    for p in range(n + 1):
        dim_c = C.dims[p]
        dim_z = dim_c - ranks[p]
        dim_b = ranks[p - 1] if p > 0 else 0
        entry = dict(p=p, dim_c=dim_c, dim_z=dim_z, dim_b=dim_b, dim_h=dim_z - dim_b)
        if representatives:
            z = kernel_basis(C.differentials[p])
            b = image_basis(C.differentials[p - 1]) if p > 0 else Subspace.zero(dim_c)
            entry.update(cocycles=z, coboundaries=b, class_reps=_class_representatives(z, b))
        degrees.append(DegreeReport(**entry))
    return CohomologyReport(algebra=L, module=V, degrees=tuple(degrees))


def h2_summary(L: LieAlgebra, V: Representation) -> tuple[int, int, int, int]:
    """(dim C^2, dim Z^2, dim B^2, dim H^2) building only D_1 and D_2.

    Avoids assembling the high-degree differentials, which matters for
    the dimension-9 Heisenberg audit.
    """
    n, m = L.dim, V.dim
    dim_c2 = cochain_dim(n, 2, m)
    if n < 2:
        return dim_c2, 0, 0, 0
    b2 = rref(differential(L, V, 1))[1]
    z2 = dim_c2 - (rref(differential(L, V, 2))[1] if n > 2 else 0)
    return dim_c2, z2, b2, z2 - b2


def betti(L: LieAlgebra) -> list[int]:
    """dim H^p(g, Q) with the 1-dimensional trivial module, p = 0..n."""
    return list(cohomology(L, trivial_rep(L, 1)).h_dims)


def euler_check(C: CochainComplex) -> bool:
    """Alternating sums of dim C^p and dim H^p agree (both vanish for n >= 1)."""
    ranks = [rref(d)[1] for d in C.differentials]
    chi_c = 0
    chi_h = 0
    for p, dim_c in enumerate(C.dims):
        sign = -1 if p % 2 else 1
        chi_c += sign * dim_c
        dim_z = dim_c - ranks[p]
        dim_b = ranks[p - 1] if p > 0 else 0
        chi_h += sign * (dim_z - dim_b)
    return chi_c == chi_h
