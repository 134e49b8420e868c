"""Shared helpers for the test suite."""

from fractions import Fraction

from liecoh import (
    abelianization_rep,
    adjoint_rep,
    builtin,
    catalog_keys,
    trivial_rep,
)

ALGEBRA_KEYS = tuple(k for k in catalog_keys() if not k.startswith("family:"))
FAMILY_KEYS = tuple(k for k in catalog_keys() if k.startswith("family:"))

# nilpotent catalog entries (r4 is solvable but not nilpotent)
NILPOTENT_KEYS = tuple(k for k in ALGEBRA_KEYS if k != "r4")


def catalog_algebras():
    return [(key, builtin(key).algebra) for key in ALGEBRA_KEYS]


def module_kinds(L):
    """The three coefficient modules every sweep runs over."""
    return [
        ("trivial", trivial_rep(L, 1)),
        ("adjoint", adjoint_rep(L)),
        ("abelianization", abelianization_rep(L)[0]),
    ]


def frac(x) -> Fraction:
    return Fraction(x)


def basis_vector(n, i, c=1):
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v
