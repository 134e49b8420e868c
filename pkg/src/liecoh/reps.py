"""Coefficient modules for cohomology: trivial, adjoint, abelianization,
and restriction of a module to a subalgebra."""

from __future__ import annotations

from .linalg import Matrix, Subspace
from .lie import (
    LieAlgebra,
    complement_positions,
    derived_subalgebra,
    quotient_algebra,
    subalgebra_on_basis,
)


class Representation:
    """An action of a Lie algebra on Q^m: one m x m matrix per basis element.

    The homomorphism law action([e_i,e_j]) = [action_i, action_j] is the
    defining invariant; `verify_rep` checks it pair by pair.
    """

    __slots__ = ("algebra", "dim", "actions", "label", "component_names")

    def __init__(self, algebra: LieAlgebra, actions, label="custom", component_names=None, dim=None):
        actions = tuple(actions)
        if len(actions) != algebra.dim:
            raise ValueError("need one action matrix per basis element")
        if dim is None:
            dim = actions[0].rows if actions else 0
        for a in actions:
            if a.rows != dim or a.cols != dim:
                raise ValueError("action matrices must be square of equal size")
        self.algebra = algebra
        self.dim = dim
        self.actions = actions
        self.label = label
        self.component_names = (
            tuple(component_names)
            if component_names is not None
            else tuple(f"v{i + 1}" for i in range(dim))
        )

    def act(self, i: int, v) -> list:
        """Action of basis element e_i on a module vector."""
        return self.actions[i].matvec(v)

    def __repr__(self):
        return f"Representation({self.label}, dim={self.dim})"


def _mat_add(a: Matrix, b: Matrix) -> Matrix:
    return Matrix(a.rows, a.cols, [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(a.data, b.data)])


def _mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return Matrix(a.rows, a.cols, [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(a.data, b.data)])


def _mat_scale(c, a: Matrix) -> Matrix:
    return Matrix(a.rows, a.cols, [[c * x for x in row] for row in a.data])


def trivial_rep(L: LieAlgebra, m: int) -> Representation:
    """The trivial action on Q^m (all action matrices zero)."""
    if m < 0:
        raise ValueError("module dimension must be nonnegative")
    zero = Matrix.zeros(m, m)
    return Representation(L, [zero] * L.dim, label=f"trivial:{m}", dim=m)


def adjoint_rep(L: LieAlgebra) -> Representation:
    """g acting on itself by ad(x)y = [x, y]."""
    actions = []
    for i in range(L.dim):
        cols = [L.basis_bracket(i, j) for j in range(L.dim)]
        actions.append(
            Matrix(L.dim, L.dim, [[cols[j][k] for j in range(L.dim)] for k in range(L.dim)])
        )
    return Representation(L, actions, label="adjoint", component_names=L.names)


def abelianization_rep(L: LieAlgebra) -> tuple[Representation, Matrix]:
    """g/[g,g] with the induced (necessarily trivial) action, plus g -> g/[g,g].

    The induced action is computed and checked to be zero, then stored as
    literal zero matrices; downstream code may rely on exact zeros.
    """
    derived = derived_subalgebra(L)
    quotient, projection = quotient_algebra(L, derived)
    comp = complement_positions(L.dim, derived)
    for i in range(L.dim):
        for q in comp:
            image = projection.matvec(L.basis_bracket(i, q))
            if any(image):
                raise AssertionError("abelianized action is not zero; bracket is broken")
    m = quotient.dim
    zero = Matrix.zeros(m, m)
    names = tuple(f"[{n}]" for n in quotient.names)
    rep = Representation(L, [zero] * L.dim, label="abelianization", component_names=names, dim=m)
    return rep, projection


def restrict_rep(L: LieAlgebra, H: Subspace, V: Representation) -> Representation:
    """V as a module over the subalgebra H, on H's echelon basis."""
    if V.algebra != L:
        raise ValueError("representation does not belong to the given algebra")
    sub = subalgebra_on_basis(L, H)
    actions = []
    for row in H.basis.data:
        acc = Matrix.zeros(V.dim, V.dim)
        for i, c in enumerate(row):
            if c:
                acc = _mat_add(acc, _mat_scale(c, V.actions[i]))
        actions.append(acc)
    return Representation(
        sub, actions, label=f"{V.label}|sub", component_names=V.component_names, dim=V.dim
    )


def verify_rep(V: Representation) -> list:
    """Basis pairs (i, j) where the homomorphism law fails; empty iff valid."""
    L = V.algebra
    bad = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = Matrix.zeros(V.dim, V.dim)
            for k, c in enumerate(L.basis_bracket(i, j)):
                if c:
                    lhs = _mat_add(lhs, _mat_scale(c, V.actions[k]))
            rhs = _mat_sub(
                V.actions[i].matmul(V.actions[j]),
                V.actions[j].matmul(V.actions[i]),
            )
            if lhs != rhs:
                bad.append((i, j))
    return bad
