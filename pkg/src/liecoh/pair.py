"""The deformation complex of a pair (g, h): restriction, relative
subcomplex, long exact sequence, and the connecting map.

The relative complex is realized as the degreewise kernel of the
restriction i* : C^p(g, V) -> C^p(h, V) with the induced differential;
this is the unique model for which

    0 -> C^*(rel) -> C^*(g, V) -> C^*(h, V) -> 0

is short exact, so the dimension identity and the exactness of the long
sequence become checkable facts rather than assumptions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import (
    Matrix,
    Subspace,
    det_rows,
    image_basis,
    kernel_basis,
    rref,
    solve,
    zero_vector,
)
from .lie import LieAlgebra, subalgebra_on_basis
from .reps import Representation, restrict_rep, verify_rep
from .cochain import cochain_dim, differential


class PairSetup:
    """A subalgebra h of g plus a g-module, with the restricted h-module.

    `projection` is the canonical retraction g -> h that kills the
    standard basis vectors at the non-pivot columns of h's echelon
    basis; it is the default lift used by the connecting map.
    """

    __slots__ = (
        "algebra",
        "sub_space",
        "sub_algebra",
        "module",
        "restricted",
        "inclusion",
        "projection",
    )

    def __init__(self, L: LieAlgebra, H: Subspace, V: Representation):
        if H.ambient_dim != L.dim:
            raise ValueError("subalgebra must live in the algebra's space")
        self.algebra = L
        self.sub_space = H
        self.sub_algebra = subalgebra_on_basis(L, H)  # raises NotSubalgebraError
        self.module = V
        self.restricted = restrict_rep(L, H, V)
        if verify_rep(self.restricted):
            raise ValueError("restricted module fails the homomorphism law")
        r = H.dim
        self.inclusion = Matrix(
            L.dim, r, [[H.basis.data[a][i] for a in range(r)] for i in range(L.dim)]
        )
        self.projection = Matrix(
            r, L.dim, [[1 if j == H.pivots[a] else 0 for j in range(L.dim)] for a in range(r)]
        )

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def sub_dim(self) -> int:
        return self.sub_space.dim


def pullback_matrix(A: Matrix, p: int, m: int) -> Matrix:
    """Matrix of f -> f(A ., ..., A .) : C^p(Y, V) -> C^p(X, V).

    A is the dimY x dimX matrix of a linear map X -> Y; the entry at
    ((S, a), (U, a)) is the p x p minor det A[U, S].
    """
    dim_x, dim_y = A.cols, A.rows
    src = list(itertools.combinations(range(dim_y), p))
    dst = list(itertools.combinations(range(dim_x), p))
    rows = [zero_vector(len(src) * m) for _ in range(len(dst) * m)]
    for si, S in enumerate(dst):
        for ui, U in enumerate(src):
            minor = det_rows([[A.data[u][s] for s in S] for u in U]) if p else 1
            if minor:
                for a in range(m):
                    rows[si * m + a][ui * m + a] = minor
    return Matrix(len(dst) * m, len(src) * m, rows)


def restriction_matrix(P: PairSetup, p: int) -> Matrix:
    """i* : C^p(g, V) -> C^p(h, V), pulling back along the inclusion."""
    return pullback_matrix(P.inclusion, p, P.module.dim)


def lift_matrix(P: PairSetup, p: int, projection: Matrix | None = None) -> Matrix:
    """A section of i*: extension by zero on the complement of h.

    A custom projection (any retraction with projection . inclusion = id)
    may be supplied; this is how lift-independence is exercised.
    """
    proj = projection if projection is not None else P.projection
    if proj.matmul(P.inclusion) != Matrix.identity(P.sub_dim):
        raise ValueError("projection is not a retraction onto the subalgebra")
    return pullback_matrix(proj, p, P.module.dim)


@dataclass(frozen=True)
class RelativeComplex:
    """ker i* per degree, with the induced differential in kernel coordinates."""

    pair: PairSetup
    kernels: tuple[Subspace, ...]
    differentials: tuple[Matrix, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(k.dim for k in self.kernels)


def relative_complex(P: PairSetup) -> RelativeComplex:
    n = P.algebra.dim
    kernels = [kernel_basis(restriction_matrix(P, p)) for p in range(n + 1)]
    big = [differential(P.algebra, P.module, p) for p in range(n + 1)]
    diffs = []
    for p in range(n + 1):
        cols = []
        target = kernels[p + 1] if p + 1 <= n else None
        for v in kernels[p].basis.data:
            w = big[p].matvec(list(v))
            if target is None:
                continue
            c = target.coords(w)
            if c is None:
                raise AssertionError("induced differential leaves the relative subcomplex")
            cols.append(c)
        rows_n = target.dim if target is not None else 0
        diffs.append(
            Matrix(rows_n, kernels[p].dim, [[col[r] for col in cols] for r in range(rows_n)])
        )
    for p in range(n):
        if not diffs[p + 1].matmul(diffs[p]).is_zero():
            raise AssertionError("relative differential does not square to zero")
    return RelativeComplex(pair=P, kernels=tuple(kernels), differentials=tuple(diffs))


class CohomologyClasses:
    """H = Z/B of one degree, with class coordinates for induced maps."""

    __slots__ = ("dim_c", "cocycles", "coboundaries", "reps", "dim", "_span")

    def __init__(self, dim_c: int, d_in: Matrix | None, d_out: Matrix | None):
        self.dim_c = dim_c
        self.cocycles = kernel_basis(d_out) if d_out is not None else Subspace.full(dim_c)
        self.coboundaries = image_basis(d_in) if d_in is not None else Subspace.zero(dim_c)
        residues = [self.coboundaries.reduce(r) for r in self.cocycles.basis.data]
        self.reps = Subspace.from_vectors(dim_c, [r for r in residues if any(r)])
        self.dim = self.reps.dim
        if self.dim != self.cocycles.dim - self.coboundaries.dim:
            raise AssertionError("coboundaries do not sit inside cocycles")
        self._span = list(self.coboundaries.basis.data) + list(self.reps.basis.data)

    def class_coords(self, w) -> list:
        """Coordinates of the class of the cocycle w on the chosen reps."""
        if not self._span:
            if any(w):
                raise ValueError("vector is not a cocycle")
            return []
        M = Matrix.from_rows(self._span).transpose()
        c = solve(M, list(w))
        if c is None:
            raise ValueError("vector is not in the cocycle space")
        return c[self.coboundaries.dim :]

    def representative(self, k: int) -> list:
        return list(self.reps.basis.data[k])


def _zero_classes() -> CohomologyClasses:
    return CohomologyClasses(0, None, None)


def _complex_classes(dims, diffs) -> list[CohomologyClasses]:
    out = []
    for p, dim_c in enumerate(dims):
        d_in = diffs[p - 1] if p > 0 else None
        d_out = diffs[p] if p < len(diffs) else None
        out.append(CohomologyClasses(dim_c, d_in, d_out))
    return out


@dataclass(frozen=True)
class LESRow:
    p: int
    dim_rel: int
    dim_g: int
    dim_h: int
    rank_to_g: int
    rank_to_h: int
    rank_connecting: int
    exact_at_rel: bool
    exact_at_g: bool
    exact_at_h: bool

    @property
    def exact(self) -> bool:
        return self.exact_at_rel and self.exact_at_g and self.exact_at_h


@dataclass(frozen=True)
class LESTable:
    pair: PairSetup
    rows: tuple[LESRow, ...]

    @property
    def all_exact(self) -> bool:
        return all(r.exact for r in self.rows)


class _LESData:
    """Shared assembly for les_table and connecting_map."""

    def __init__(self, P: PairSetup):
        n = P.algebra.dim
        r = P.sub_dim
        m = P.module.dim
        self.P = P
        self.n = n
        self.rel = relative_complex(P)
        g_diffs = [differential(P.algebra, P.module, p) for p in range(n + 1)]
        h_diffs = [differential(P.sub_algebra, P.restricted, p) for p in range(r + 1)]
        self.g_diffs = g_diffs
        self.h_diffs = h_diffs
        self.Hrel = _complex_classes([k.dim for k in self.rel.kernels], list(self.rel.differentials))
        self.Hrel.append(_zero_classes())  # degree n + 1
        self.Hg = _complex_classes(
            [cochain_dim(n, p, m) for p in range(n + 1)], g_diffs
        )
        self.Hh = _complex_classes(
            [cochain_dim(r, p, m) for p in range(r + 1)], h_diffs
        )
        self.Hh.extend(_zero_classes() for _ in range(n - r))
        self.restrictions = [restriction_matrix(P, p) for p in range(n + 2)]

    def map_to_g(self, p: int) -> Matrix:
        """H^p(rel) -> H^p(g), induced by inclusion of the kernel."""
        src, dst = self.Hrel[p], self.Hg[p]
        kernel = self.rel.kernels[p]
        cols = []
        for k in range(src.dim):
            coords = src.representative(k)
            ambient = zero_vector(kernel.ambient_dim)
            for c, row in zip(coords, kernel.basis.data):
                if c:
                    for j, x in enumerate(row):
                        if x:
                            ambient[j] += c * x
            cols.append(dst.class_coords(ambient))
        return Matrix(dst.dim, src.dim, [[col[i] for col in cols] for i in range(dst.dim)])

    def map_to_h(self, p: int) -> Matrix:
        """H^p(g) -> H^p(h), induced by i*."""
        src, dst = self.Hg[p], self.Hh[p]
        R = self.restrictions[p]
        cols = [dst.class_coords(R.matvec(src.representative(k))) for k in range(src.dim)]
        return Matrix(dst.dim, src.dim, [[col[i] for col in cols] for i in range(dst.dim)])

    def connecting_cocycle(self, p: int, beta, projection: Matrix | None = None) -> list:
        """delta(lift beta) in kernel coordinates of C^{p+1}(rel).

        beta must be a cocycle in C^p(h, V); the lift is extension by
        zero on the chosen complement.
        """
        if p >= self.n:
            return []  # C^{n+1}(g) = 0, so every top boundary vanishes
        lift = lift_matrix(self.P, p, projection)
        b = lift.matvec(list(beta))
        d = self.g_diffs[p].matvec(b)
        target = self.rel.kernels[p + 1]
        coords = target.coords(d)
        if coords is None:
            raise ValueError("connecting image left the relative subcomplex; beta is not a cocycle")
        return coords

    def connecting(self, p: int, projection: Matrix | None = None) -> Matrix:
        """H^p(h) -> H^{p+1}(rel)."""
        src = self.Hh[p]
        dst = self.Hrel[p + 1]
        cols = []
        for k in range(src.dim):
            kcoords = self.connecting_cocycle(p, src.representative(k), projection)
            cols.append(dst.class_coords(kcoords))
        return Matrix(dst.dim, src.dim, [[col[i] for col in cols] for i in range(dst.dim)])


def _exact_at(incoming: Matrix, outgoing: Matrix, dim_node: int) -> bool:
    if incoming.rows != dim_node or outgoing.cols != dim_node:
        raise ValueError("node dimensions do not line up")
    if not outgoing.matmul(incoming).is_zero():
        return False
    return rref(incoming)[1] + rref(outgoing)[1] == dim_node


def connecting_map(P: PairSetup, p: int, projection: Matrix | None = None) -> Matrix:
    """Matrix of the boundary map H^p(h, V) -> H^{p+1}(rel)."""
    return _LESData(P).connecting(p, projection)


def connecting_cocycle(P: PairSetup, p: int, beta, projection: Matrix | None = None) -> list:
    """The relative cocycle representing the boundary of [beta] (K-coords)."""
    return _LESData(P).connecting_cocycle(p, beta, projection)


def les_table(P: PairSetup) -> LESTable:
    """Dims, induced ranks and an exactness verdict at every node."""
    data = _LESData(P)
    n = data.n
    js = [data.map_to_g(p) for p in range(n + 1)]
    rs = [data.map_to_h(p) for p in range(n + 1)]
    bds = [data.connecting(p) for p in range(n + 1)]
    rows = []
    for p in range(n + 1):
        incoming_rel = (
            bds[p - 1] if p > 0 else Matrix.zeros(data.Hrel[0].dim, 0)
        )
        rows.append(
            LESRow(
                p=p,
                dim_rel=data.Hrel[p].dim,
                dim_g=data.Hg[p].dim,
                dim_h=data.Hh[p].dim,
                rank_to_g=rref(js[p])[1],
                rank_to_h=rref(rs[p])[1],
                rank_connecting=rref(bds[p])[1],
                exact_at_rel=_exact_at(incoming_rel, js[p], data.Hrel[p].dim),
                exact_at_g=_exact_at(js[p], rs[p], data.Hg[p].dim),
                exact_at_h=_exact_at(rs[p], bds[p], data.Hh[p].dim),
            )
        )
    return LESTable(pair=P, rows=tuple(rows))


def class_extends(P: PairSetup, p: int, beta) -> list | None:
    """A global cocycle a with [i* a] = [beta], or None if obstructed.

    Solves  D_p a = 0  and  i* a = beta + d c  for (a, c); existence is
    equivalent to the connecting image of [beta] vanishing.
    """
    n, r, m = P.algebra.dim, P.sub_dim, P.module.dim
    dim_a = cochain_dim(n, p, m)
    dim_c = cochain_dim(r, p - 1, m) if p > 0 else 0
    d_g = differential(P.algebra, P.module, p)
    R = restriction_matrix(P, p)
    dh_prev = (
        differential(P.sub_algebra, P.restricted, p - 1)
        if 0 < p <= r
        else Matrix.zeros(cochain_dim(r, p, m), dim_c)
    )
    top = [list(row) + [0] * dim_c for row in d_g.data]
    bottom = [
        list(rrow) + [-x for x in drow]
        for rrow, drow in zip(R.data, dh_prev.data)
    ]
    rhs = [0] * d_g.rows + list(beta)
    sol = solve(Matrix(len(top) + len(bottom), dim_a + dim_c, top + bottom), rhs)
    if sol is None:
        return None
    return sol[:dim_a]
