from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecoh.linalg import (
    Matrix,
    Poly,
    Subspace,
    det,
    image_basis,
    kernel_basis,
    poly_derivative_at_zero,
    poly_eval,
    poly_str,
    rat,
    rref,
    solve,
)

F = Fraction


def test_rref_proportional_rows():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    reduced, rank = rref(m)
    assert rank == 1
    assert reduced.data[0] == (F(1), F(2))


def test_rref_identity():
    _, rank = rref(Matrix.identity(3))
    assert rank == 3


def test_rref_hand_elimination():
    # worked by hand: rows (0,1),(1,0),(1,1) reduce to the 2x2 identity
    m = Matrix.from_rows([[0, 1], [1, 0], [1, 1]])
    reduced, rank = rref(m)
    assert rank == 2
    assert reduced.data[0] == (F(1), F(0))
    assert reduced.data[1] == (F(0), F(1))
    assert reduced.data[2] == (F(0), F(0))


def test_rref_does_not_mutate_input():
    m = Matrix.from_rows([[2, 4], [1, 3]])
    before = m.data
    rref(m)
    assert m.data == before


def test_kernel_zero_map():
    assert kernel_basis(Matrix.zeros(2, 3)).dim == 3


def test_kernel_identity():
    assert kernel_basis(Matrix.identity(4)).dim == 0


def test_kernel_single_row():
    ker = kernel_basis(Matrix.from_rows([[1, 1, 0]]))
    assert ker.dim == 2
    assert ker.contains([1, -1, 0])
    assert not ker.contains([1, 0, 0])


def test_image_identity():
    img = image_basis(Matrix.identity(2))
    assert img.dim == 2


def test_image_zero():
    assert image_basis(Matrix.zeros(3, 2)).dim == 0


def test_image_rank_one():
    img = image_basis(Matrix.from_rows([[1, 2], [2, 4]]))
    assert img.dim == 1
    assert img.contains([1, 2])
    assert not img.contains([1, 0])


def test_solve_unique():
    m = Matrix.from_rows([[1, 1], [0, 1]])
    assert solve(m, [F(3), F(1)]) == [F(2), F(1)]


def test_solve_inconsistent():
    m = Matrix.from_rows([[1, 1], [1, 1]])
    assert solve(m, [F(0), F(1)]) is None


def test_det_known():
    assert det(Matrix.from_rows([[1, 2], [3, 4]])) == F(-2)
    assert det(Matrix.identity(3)) == F(1)
    assert det(Matrix.from_rows([[1, 2], [2, 4]])) == F(0)


def test_subspace_coords_roundtrip():
    s = Subspace.from_vectors(3, [[1, 0, 2], [0, 1, 1]])
    v = [F(2), F(-1), F(3)]
    c = s.coords(v)
    assert c is not None
    rebuilt = [F(0)] * 3
    for coef, row in zip(c, s.basis.data):
        rebuilt = [a + coef * b for a, b in zip(rebuilt, row)]
    assert rebuilt == v
    assert s.coords([1, 0, 0]) is None


def test_subspace_canonical_equality():
    a = Subspace.from_vectors(3, [[1, 1, 0], [0, 0, 1]])
    b = Subspace.from_vectors(3, [[1, 1, 1], [0, 0, 2]])
    assert a == b


def test_subspace_rejects_non_reduced_bases():
    with pytest.raises(ValueError):
        Subspace(2, Matrix.from_rows([[2, 0]]))  # pivot not 1
    with pytest.raises(ValueError):
        Subspace(3, Matrix.from_rows([[1, 1, 0], [0, 1, 0]]))  # pivot col dirty
    with pytest.raises(ValueError):
        Subspace(2, Matrix.from_rows([[0, 1], [1, 0]]))  # pivots out of order
    with pytest.raises(ValueError):
        Subspace(2, Matrix.from_rows([[0, 0]]))  # zero row


matrix_strategy = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(
                st.fractions(
                    min_value=-4, max_value=4, max_denominator=3
                ),
                min_size=c,
                max_size=c,
            ),
            min_size=r,
            max_size=r,
        )
    )
)


@settings(max_examples=60, deadline=None)
@given(matrix_strategy)
def test_rank_nullity(rows):
    m = Matrix.from_rows(rows)
    _, rank = rref(m)
    assert rank + kernel_basis(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(matrix_strategy)
def test_rref_idempotent(rows):
    m = Matrix.from_rows(rows)
    r1, _ = rref(m)
    r2, _ = rref(r1)
    assert r1 == r2


@settings(max_examples=60, deadline=None)
@given(matrix_strategy)
def test_rank_equals_transpose_rank(rows):
    m = Matrix.from_rows(rows)
    assert rref(m)[1] == rref(m.transpose())[1]


@settings(max_examples=60, deadline=None)
@given(matrix_strategy)
def test_image_dim_is_rank(rows):
    m = Matrix.from_rows(rows)
    assert image_basis(m).dim == rref(m)[1]


@given(
    st.integers(-50, 50),
    st.integers(1, 30),
    st.integers(-50, 50),
    st.integers(1, 30),
)
def test_rational_addition_is_exact(a, b, c, d):
    # normalised sum equals the raw cross-multiplication value
    lhs = F(a, b) + F(c, d)
    assert lhs == F(a * d + c * b, b * d)


def test_poly_eval_examples():
    assert poly_eval(Poly([0, 1]), F(1, 2)) == F(1, 2)
    assert poly_eval(Poly(), 7) == 0
    assert poly_eval(Poly([1, -1, 1]), 2) == 3


def test_poly_derivative_at_zero():
    assert poly_derivative_at_zero(Poly([0, 1])) == 1
    assert poly_derivative_at_zero(Poly([3])) == 0
    assert poly_derivative_at_zero(Poly([0, 2, 5])) == 2


def test_poly_trimming_and_zero():
    assert Poly([1, 0, 0]).coeffs == (F(1),)
    assert Poly([0, 0]).is_zero()
    assert Poly().degree == -1


def test_poly_str_roundtrips_sign_layout():
    assert poly_str(Poly([1, -1, 1])) == "1 - t + t^2"
    assert poly_str(Poly([0, F(1, 2)])) == "1/2*t"
    assert poly_str(Poly([0, -1])) == "-t"
    assert poly_str(Poly()) == "0"


coeff_lists = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=5
)


@given(coeff_lists, coeff_lists, st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_poly_product_evaluates_pointwise(a, b, t0):
    pa, pb = Poly(a), Poly(b)
    assert poly_eval(pa * pb, t0) == poly_eval(pa, t0) * poly_eval(pb, t0)


@given(coeff_lists, coeff_lists)
def test_poly_derivative_at_zero_is_linear(a, b):
    pa, pb = Poly(a), Poly(b)
    assert poly_derivative_at_zero(pa + pb) == poly_derivative_at_zero(
        pa
    ) + poly_derivative_at_zero(pb)


def test_rat_coercions():
    assert rat("2/6") == F(1, 3)
    assert rat(3) == F(3)
    with pytest.raises(ValueError):
        rat("not-a-number")
