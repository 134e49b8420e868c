"""Lie algebras given by rational structure constants on a chosen basis.

Only pairs (i, j) with i < j are stored; antisymmetry is implicit.  The
Jacobi identity is validated at construction unless explicitly deferred
(the deferred mode exists so diagnostics can list the failing triples).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import (
    Matrix,
    Subspace,
    kernel_basis,
    rat,
    vec_add,
    vec_is_zero,
    zero_vector,
)


class JacobiError(ValueError):
    """Structure constants violating the Jacobi identity."""

    def __init__(self, defects):
        self.defects = defects
        triples = ", ".join(str(tuple(i + 1 for i in t)) for t, _ in defects[:4])
        more = "" if len(defects) <= 4 else f" (+{len(defects) - 4} more)"
        super().__init__(f"Jacobi identity fails at basis triples {triples}{more}")


class NotSubalgebraError(ValueError):
    """A spanning set that is not closed under the bracket."""

    def __init__(self, pair, message=None):
        self.pair = pair
        super().__init__(message or f"bracket of basis rows {pair} leaves the span")


class NotIdealError(ValueError):
    pass


def default_names(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


class LieAlgebra:
    """A finite-dimensional Lie algebra over Q on an explicit basis."""

    __slots__ = ("dim", "names", "sc")

    def __init__(self, dim: int, brackets=None, names=None, validate: bool = True):
        self.dim = dim
        self.names = tuple(names) if names is not None else default_names(dim)
        if len(self.names) != dim:
            raise ValueError("number of basis names does not match dimension")
        sc = {}
        for (i, j), coeffs in (brackets or {}).items():
            if not 0 <= i < j < dim:
                raise ValueError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < dim")
            v = tuple(rat(c) for c in coeffs)
            if len(v) != dim:
                raise ValueError(f"bracket value for ({i}, {j}) must have length {dim}")
            if any(v):
                sc[(i, j)] = v
        self.sc = sc
        if validate:
            defects = jacobi_defects(self)
            if defects:
                raise JacobiError(defects)

    def basis_bracket(self, i: int, j: int) -> list:
        """[e_i, e_j] as a coefficient vector."""
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            v = self.sc.get((i, j))
            return list(v) if v else zero_vector(self.dim)
        v = self.sc.get((j, i))
        return [-c for c in v] if v else zero_vector(self.dim)

    def bracket(self, u, v) -> list:
        """Bilinear antisymmetric extension of the structure constants."""
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("bracket arguments must match the algebra dimension")
        out = zero_vector(self.dim)
        for (i, j), w in self.sc.items():
            c = u[i] * v[j] - u[j] * v[i]
            if c:
                for k, wk in enumerate(w):
                    if wk:
                        out[k] += c * wk
        return out

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def basis_name(self, i: int) -> str:
        return self.names[i]

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.sc == other.sc
        )

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.sc.items()))))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.sc)})"


@dataclass(frozen=True)
class SeriesResult:
    """A descending characteristic series, stabilised term repeated once."""

    label: str
    terms: tuple[Subspace, ...]
    stabilized: bool

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.terms)

    @property
    def profile(self) -> tuple[int, ...]:
        """Dims up to and including the first stabilised term."""
        return self.dims[:-1]

    @property
    def final_dim(self) -> int:
        return self.terms[-1].dim


def jacobi_defects(L: LieAlgebra) -> list:
    """All basis triples i<j<k with a nonzero Jacobi defect.

    The defect is [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
    """
    out = []
    basis = [
        [rat(1) if a == b else rat(0) for b in range(L.dim)] for a in range(L.dim)
    ]
    for i, j, k in itertools.combinations(range(L.dim), 3):
        d = vec_add(
            vec_add(
                L.bracket(basis[i], L.bracket(basis[j], basis[k])),
                L.bracket(basis[j], L.bracket(basis[k], basis[i])),
            ),
            L.bracket(basis[k], L.bracket(basis[i], basis[j])),
        )
        if not vec_is_zero(d):
            out.append(((i, j, k), d))
    return out


def product_space(L: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """Span of [a, b] over basis vectors a of A and b of B."""
    if A.ambient_dim != L.dim or B.ambient_dim != L.dim:
        raise ValueError("subspaces must live in the algebra's ambient space")
    vecs = [L.bracket(a, b) for a in A.basis.data for b in B.basis.data]
    return Subspace.from_vectors(L.dim, vecs)


def _descending_series(L: LieAlgebra, step, label: str) -> SeriesResult:
    terms = [L.full_space()]
    while True:
        nxt = step(terms[-1])
        terms.append(nxt)
        if nxt == terms[-2]:
            return SeriesResult(label=label, terms=tuple(terms), stabilized=True)


def lower_central_series(L: LieAlgebra) -> SeriesResult:
    """g^0 = g, g^{i+1} = [g, g^i], iterated until it stabilises."""
    full = L.full_space()
    return _descending_series(L, lambda s: product_space(L, full, s), "lower-central")


def derived_series(L: LieAlgebra) -> SeriesResult:
    """g^(0) = g, g^(i+1) = [g^(i), g^(i)]."""
    return _descending_series(L, lambda s: product_space(L, s, s), "derived")


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    full = L.full_space()
    return product_space(L, full, full)


def center(L: LieAlgebra) -> Subspace:
    """{v : [v, e_j] = 0 for all j}, computed as one exact kernel."""
    rows = []
    for j in range(L.dim):
        for k in range(L.dim):
            rows.append([L.basis_bracket(i, j)[k] for i in range(L.dim)])
    return kernel_basis(Matrix(L.dim * L.dim, L.dim, rows))


def nilpotency_class(L: LieAlgebra):
    """Least s with g^s = 0, or None when the series stops above zero."""
    series = lower_central_series(L)
    if series.final_dim != 0:
        return None
    return len(series.profile) - 1


def derived_length(L: LieAlgebra):
    """Least r with g^(r) = 0, or None when the algebra is not solvable."""
    series = derived_series(L)
    if series.final_dim != 0:
        return None
    return len(series.profile) - 1


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    """Block bracket with zero cross terms; clashing right names get primes."""
    n1, n2 = L1.dim, L2.dim
    names = list(L1.names)
    for name in L2.names:
        while name in names:
            name = name + "'"
        names.append(name)
    brackets = {}
    for (i, j), v in L1.sc.items():
        brackets[(i, j)] = tuple(v) + (rat(0),) * n2
    for (i, j), v in L2.sc.items():
        brackets[(i + n1, j + n1)] = (rat(0),) * n1 + tuple(v)
    return LieAlgebra(n1 + n2, brackets, names=names)


def is_ideal(L: LieAlgebra, I: Subspace) -> bool:
    return product_space(L, L.full_space(), I).is_subspace_of(I)


def complement_positions(L_dim: int, I: Subspace) -> list[int]:
    """Standard basis positions complementary to I (its non-pivot columns)."""
    pivot_set = set(I.pivots)
    return [j for j in range(L_dim) if j not in pivot_set]


def quotient_algebra(L: LieAlgebra, I: Subspace) -> tuple[LieAlgebra, Matrix]:
    """L / I on the non-pivot complement basis, with the projection matrix.

    The complement of I is spanned by the standard basis vectors at the
    non-pivot columns of I's echelon basis, so the output is reproducible.
    """
    if not is_ideal(L, I):
        raise NotIdealError("subspace is not an ideal of the algebra")
    comp = complement_positions(L.dim, I)
    m = len(comp)
    proj_cols = []
    for j in range(L.dim):
        e = zero_vector(L.dim)
        e[j] = rat(1)
        r = I.reduce(e)
        proj_cols.append([r[q] for q in comp])
    projection = Matrix(m, L.dim, [[proj_cols[j][a] for j in range(L.dim)] for a in range(m)])
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = L.basis_bracket(comp[a], comp[b])
            brackets[(a, b)] = projection.matvec(w)
    names = [L.names[q] for q in comp]
    return LieAlgebra(m, brackets, names=names), projection


def is_subalgebra(L: LieAlgebra, H: Subspace):
    """None when H is bracket-closed, else the violating basis-row pair."""
    rows = H.basis.data
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            if not H.contains(L.bracket(rows[a], rows[b])):
                return (a, b)
    return None


def subalgebra_on_basis(L: LieAlgebra, H: Subspace) -> LieAlgebra:
    """H as an abstract Lie algebra on its echelon basis rows."""
    bad = is_subalgebra(L, H)
    if bad is not None:
        raise NotSubalgebraError(bad)
    rows = H.basis.data
    r = len(rows)
    brackets = {}
    for a in range(r):
        for b in range(a + 1, r):
            w = L.bracket(rows[a], rows[b])
            brackets[(a, b)] = H.coords(w)
    names = [f"h{a + 1}" for a in range(r)]
    return LieAlgebra(r, brackets, names=names)


def rescale_basis(L: LieAlgebra, factors) -> LieAlgebra:
    """The same algebra on the rescaled basis d_i e_i (all d_i nonzero)."""
    d = [rat(x) for x in factors]
    if len(d) != L.dim or not all(d):
        raise ValueError("need one nonzero factor per basis element")
    brackets = {}
    for (i, j), v in L.sc.items():
        scale = d[i] * d[j]
        brackets[(i, j)] = [scale * c / d[k] for k, c in enumerate(v)]
    return LieAlgebra(L.dim, brackets, names=L.names)


def span_of_basis_indices(L: LieAlgebra, indices) -> Subspace:
    """Subspace spanned by the named standard basis vectors (0-based)."""
    vecs = []
    for i in indices:
        v = zero_vector(L.dim)
        v[i] = rat(1)
        vecs.append(v)
    return Subspace.from_vectors(L.dim, vecs)


def abelian(dim: int, names=None) -> LieAlgebra:
    return LieAlgebra(dim, {}, names=names)
