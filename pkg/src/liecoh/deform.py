"""One-parameter families of Lie algebras: structure constants that are
polynomials in t, symbolic Jacobi verification, per-sample classification
and the first-order cocycle of the family."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Poly, poly_derivative_at_zero, rat
from .lie import (
    LieAlgebra,
    default_names,
    derived_length,
    derived_series,
    lower_central_series,
    nilpotency_class,
)
from .reps import adjoint_rep
from .cochain import cochain_dim, cocycle_check, wedge_basis

NILPOTENT = "nilpotent"
SOLVABLE = "solvable-non-nilpotent"
NON_SOLVABLE = "non-solvable"

DEFAULT_SAMPLES = (Fraction(1), Fraction(1, 2), Fraction(-1), Fraction(2))


class FamilyJacobiError(ValueError):
    """A sampled family member violating the Jacobi identity."""


class DeformationFamily:
    """Structure constants polynomial in t; t = 0 must be a Lie algebra."""

    __slots__ = ("dim", "names", "sc_t")

    def __init__(self, dim: int, brackets=None, names=None):
        self.dim = dim
        self.names = tuple(names) if names is not None else default_names(dim)
        if len(self.names) != dim:
            raise ValueError("number of basis names does not match dimension")
        sc_t = {}
        for (i, j), polys in (brackets or {}).items():
            if not 0 <= i < j < dim:
                raise ValueError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < dim")
            v = tuple(c if isinstance(c, Poly) else Poly.const(c) for c in polys)
            if len(v) != dim:
                raise ValueError(f"bracket value for ({i}, {j}) must have length {dim}")
            if any(not c.is_zero() for c in v):
                sc_t[(i, j)] = v
        self.sc_t = sc_t
        # F_0 = F: the base point must itself be a Lie algebra
        evaluate(self, 0)

    def basis_bracket_poly(self, i: int, j: int) -> list[Poly]:
        zero = Poly()
        if i == j:
            return [zero] * self.dim
        if i < j:
            v = self.sc_t.get((i, j))
            return list(v) if v else [zero] * self.dim
        v = self.sc_t.get((j, i))
        return [-c for c in v] if v else [zero] * self.dim

    def bracket_poly(self, u: list[Poly], v: list[Poly]) -> list[Poly]:
        """Bracket of vectors with Poly coefficients, exactly in t."""
        out = [Poly() for _ in range(self.dim)]
        for (i, j), w in self.sc_t.items():
            c = u[i] * v[j] - u[j] * v[i]
            if not c.is_zero():
                for k, wk in enumerate(w):
                    if not wk.is_zero():
                        out[k] = out[k] + c * wk
        return out

    def is_constant(self) -> bool:
        return all(c.is_constant() for v in self.sc_t.values() for c in v)

    def __eq__(self, other):
        return (
            isinstance(other, DeformationFamily)
            and self.dim == other.dim
            and self.sc_t == other.sc_t
        )

    def __repr__(self):
        return f"DeformationFamily(dim={self.dim}, brackets={len(self.sc_t)})"


def constant_family(L: LieAlgebra) -> DeformationFamily:
    """The algebra L viewed as a family that does not move."""
    brackets = {
        key: [Poly.const(c) for c in v] for key, v in L.sc.items()
    }
    return DeformationFamily(L.dim, brackets, names=L.names)


def family_jacobi(F: DeformationFamily) -> list:
    """Triples with a Jacobi defect that is not identically zero in t.

    Empty iff the family is a Lie algebra for every value of t.
    """
    zero = Poly()
    one = Poly.const(1)
    basis = [
        [one if a == b else zero for b in range(F.dim)] for a in range(F.dim)
    ]
    out = []
    for i in range(F.dim):
        for j in range(i + 1, F.dim):
            for k in range(j + 1, F.dim):
                d1 = F.bracket_poly(basis[i], F.bracket_poly(basis[j], basis[k]))
                d2 = F.bracket_poly(basis[j], F.bracket_poly(basis[k], basis[i]))
                d3 = F.bracket_poly(basis[k], F.bracket_poly(basis[i], basis[j]))
                defect = [a + b + c for a, b, c in zip(d1, d2, d3)]
                if any(not c.is_zero() for c in defect):
                    out.append(((i, j, k), defect))
    return out


def evaluate(F: DeformationFamily, t0) -> LieAlgebra:
    """Exact substitution t = t0; the result is Jacobi-validated."""
    t0 = rat(t0)
    brackets = {key: [c(t0) for c in v] for key, v in F.sc_t.items()}
    return LieAlgebra(F.dim, brackets, names=F.names)


@dataclass(frozen=True)
class SampleVerdict:
    """Classification of one family member F_{t0}."""

    t0: Fraction
    jacobi_ok: bool
    kind: str
    nilpotency_index: int | None
    solvable_length: int | None
    lcs_dims: tuple[int, ...]
    derived_dims: tuple[int, ...]

    def describe(self) -> str:
        if self.kind == NILPOTENT:
            return f"nilpotent (index {self.nilpotency_index})"
        if self.kind == SOLVABLE:
            return f"solvable, non-nilpotent (derived length {self.solvable_length})"
        return "not solvable"


def classify_sample(F: DeformationFamily, t0) -> SampleVerdict:
    """Run both characteristic series at t0 and classify the member."""
    t0 = rat(t0)
    try:
        L = evaluate(F, t0)
    except Exception as exc:  # invalid member: surface the sample value
        raise FamilyJacobiError(f"family member at t = {t0} is not a Lie algebra") from exc
    lcs = lower_central_series(L)
    ds = derived_series(L)
    index = nilpotency_class(L)
    length = derived_length(L)
    if index is not None:
        kind = NILPOTENT
    elif length is not None:
        kind = SOLVABLE
    else:
        kind = NON_SOLVABLE
    return SampleVerdict(
        t0=t0,
        jacobi_ok=True,
        kind=kind,
        nilpotency_index=index,
        solvable_length=length,
        lcs_dims=lcs.profile,
        derived_dims=ds.profile,
    )


def first_order_term(F: DeformationFamily) -> list:
    """d/dt at 0 of the family, as a 2-cochain with adjoint coefficients.

    The value on (e_i, e_j) is the t^1 coefficient of the (i, j)
    structure vector; the flat layout is the one fixed in `cochain`.
    """
    base = evaluate(F, 0)
    n = F.dim
    out = [rat(0)] * cochain_dim(n, 2, n)
    ranks = wedge_basis(n, 2).rank_of
    for (i, j), v in F.sc_t.items():
        base_index = ranks[(i, j)] * n
        for k, c in enumerate(v):
            d = poly_derivative_at_zero(c)
            if d:
                out[base_index + k] = d
    return out


def check_infinitesimal(F: DeformationFamily) -> list:
    """Koszul defects of the first-order term in C^2(base, adjoint).

    Empty iff the first-order term is an adjoint 2-cocycle, which is the
    t^1 coefficient of the symbolic Jacobi defect.
    """
    if family_jacobi(F):
        raise FamilyJacobiError("family does not satisfy Jacobi for all t")
    base = evaluate(F, 0)
    return cocycle_check(first_order_term(F), base, adjoint_rep(base), 2)


def parse_claim(text: str) -> tuple[str, int | None]:
    """Parse 'nilpotent', 'nilpotent:3', 'solvable-non-nilpotent', ..."""
    head, sep, num = text.partition(":")
    head = head.strip()
    if head not in (NILPOTENT, SOLVABLE, NON_SOLVABLE):
        raise ValueError(
            f"unknown classification {head!r}; expected one of "
            f"{NILPOTENT}, {SOLVABLE}, {NON_SOLVABLE}"
        )
    return head, int(num) if sep else None


def verdict_agrees(v: SampleVerdict, claim: tuple[str, int | None]) -> bool:
    kind, number = claim
    if v.kind != kind:
        return False
    if number is None:
        return True
    if kind == NILPOTENT:
        return v.nilpotency_index == number
    if kind == SOLVABLE:
        return v.solvable_length == number
    return True


@dataclass(frozen=True)
class FamilyAudit:
    family: DeformationFamily
    symbolic_defects: tuple
    first_order_defects: tuple
    verdicts: tuple[SampleVerdict, ...]
    claim: tuple | None
    agreements: tuple[bool, ...] | None

    @property
    def jacobi_ok(self) -> bool:
        return not self.symbolic_defects

    @property
    def all_agree(self):
        if self.agreements is None:
            return None
        return all(self.agreements)


def audit_family(F: DeformationFamily, samples=None, claim: str | None = None) -> FamilyAudit:
    """Classify each sample and flag agreement with a claimed classification.

    Disagreement is reported, never raised: auditing a claim must not
    fail just because the claim is wrong.
    """
    samples = DEFAULT_SAMPLES if samples is None else tuple(rat(s) for s in samples)
    symbolic = tuple(family_jacobi(F))
    first_order = tuple(cocycle_check(
        first_order_term(F), evaluate(F, 0), adjoint_rep(evaluate(F, 0)), 2
    )) if not symbolic else ()
    verdicts = tuple(classify_sample(F, t0) for t0 in samples)
    parsed = parse_claim(claim) if isinstance(claim, str) else claim
    agreements = (
        tuple(verdict_agrees(v, parsed) for v in verdicts) if parsed is not None else None
    )
    return FamilyAudit(
        family=F,
        symbolic_defects=symbolic,
        first_order_defects=first_order,
        verdicts=verdicts,
        claim=parsed,
        agreements=agreements,
    )
