from fractions import Fraction

import pytest

from liecoh import (
    JacobiError,
    builtin,
    catalog_keys,
    emit,
    parse_algebra,
    parse_family,
    serialize_algebra,
    serialize_family,
)
from liecoh.fileformat import FileFormatError
from liecoh.linalg import Poly

F = Fraction


def test_parse_h3():
    L = parse_algebra("dim 3\n[1,2] = 3\n")
    assert L == builtin("h3").algebra
    assert L.names == ("e1", "e2", "e3")


def test_parse_with_basis_names_and_comments():
    text = """
    # three generators
    basis X Y Z
    dim 3
    [1,2] = 3   # the only bracket
    """
    L = parse_algebra(text)
    assert L.names == ("X", "Y", "Z")
    assert L == builtin("h3").algebra


def test_parse_abelian():
    L = parse_algebra("dim 2\n")
    assert L.dim == 2 and L.sc == {}


def test_parse_n4():
    L = parse_algebra("dim 4\n[1,2]=3\n[1,3]=4\n")
    assert L == builtin("n4").algebra


def test_parse_rational_and_negative_coefficients():
    L = parse_algebra("dim 3\n[1,2] = -3 + 1/2*3\n")
    assert L.sc[(0, 1)] == (F(0), F(0), F(-1, 2))
    M = parse_algebra("dim 3\n[1,2] = 2/4*1 + -1*3\n")
    assert M.sc[(0, 1)] == (F(1, 2), F(0), F(-1))


def test_parse_explicit_zero_rhs():
    L = parse_algebra("dim 3\n[1,2] = 0\n")
    assert L.sc == {}


def test_syntax_error_carries_line_number():
    with pytest.raises(FileFormatError) as err:
        parse_algebra("dim 3\n[1,2] = 3\nnonsense here\n", source="f.lie")
    assert err.value.line == 3
    assert "f.lie:3" in str(err.value)


def test_duplicate_bracket_rejected():
    with pytest.raises(FileFormatError) as err:
        parse_algebra("dim 3\n[1,2]=3\n[1,2]=3\n")
    assert "duplicate" in str(err.value)


def test_index_out_of_range_rejected():
    with pytest.raises(FileFormatError):
        parse_algebra("dim 3\n[1,4]=3\n")
    with pytest.raises(FileFormatError):
        parse_algebra("dim 3\n[1,2]=5\n")


def test_lower_triangle_rejected():
    with pytest.raises(FileFormatError):
        parse_algebra("dim 3\n[2,1]=3\n")
    with pytest.raises(FileFormatError):
        parse_algebra("dim 3\n[2,2]=3\n")


def test_missing_dim_rejected():
    with pytest.raises(FileFormatError) as err:
        parse_algebra("basis X Y\n")
    assert "dim" in str(err.value)


def test_basis_count_mismatch_rejected():
    with pytest.raises(FileFormatError):
        parse_algebra("basis X Y\ndim 3\n")


def test_polynomial_rejected_in_algebra_file():
    with pytest.raises(FileFormatError) as err:
        parse_algebra("dim 4\n[1,2] = t*3\n")
    assert "family" in str(err.value)


def test_jacobi_failure_lists_triples():
    with pytest.raises(JacobiError) as err:
        parse_algebra("dim 3\n[1,2]=1\n[1,3]=2\n")
    assert err.value.defects[0][0] == (0, 1, 2)
    assert "(1, 2, 3)" in str(err.value)


def test_parse_family_forms():
    F1 = parse_family("dim 4\n[1,2]=3\n[1,3]=4\n[2,3] = t*4\n")
    assert F1 == builtin("family:n4_t").family
    F2 = parse_family("dim 4\n[1,2] = (1 - t)*3 + t^2*4\n")
    assert F2.sc_t[(0, 1)][2] == Poly([1, -1])
    assert F2.sc_t[(0, 1)][3] == Poly([0, 0, 1])
    F3 = parse_family("dim 4\n[1,2] = 1/2*3 + t^2*4\n")
    assert F3.sc_t[(0, 1)][2] == Poly([F(1, 2)])
    assert F3.sc_t[(0, 1)][3].degree == 2


def test_parse_family_compound_coefficients():
    F4 = parse_family("dim 3\n[1,2] = 2*t*3 + (1 + 2*t - t^3)*1\n")
    assert F4.sc_t[(0, 1)][2] == Poly([0, 2])
    assert F4.sc_t[(0, 1)][0] == Poly([1, 2, 0, -1])


def test_family_term_requires_index():
    with pytest.raises(FileFormatError):
        parse_family("dim 3\n[1,2] = t\n")


def test_roundtrip_all_catalog_keys():
    for key in catalog_keys():
        entry = builtin(key)
        text = emit(key)
        if entry.kind == "family":
            again = parse_family(text)
            assert again == entry.family, key
            assert again.names == entry.family.names, key
        else:
            again = parse_algebra(text)
            assert again == entry.algebra, key
            assert again.names == entry.algebra.names, key


def test_roundtrip_fractional_and_negative():
    text = "basis a b c\ndim 3\n[1,2] = -1/3*1 + 2*3\n"
    L = parse_algebra(text)
    assert parse_algebra(serialize_algebra(L)) == L


def test_roundtrip_polynomial_shapes():
    text = "dim 4\n[1,2] = (1 - t)*3 + t^2*4\n[3,4] = -t*1\n"
    fam = parse_family(text)
    assert parse_family(serialize_family(fam)) == fam


def test_serialize_is_deterministic():
    L = builtin("n6_2").algebra
    assert serialize_algebra(L) == serialize_algebra(L)
    assert emit("h5") == emit("h5")


def test_emit_unknown_key():
    with pytest.raises(KeyError):
        emit("nope")


def test_emit_parameterized_heisenberg():
    text = emit("heisenberg(3)")
    L = parse_algebra(text)
    assert L.dim == 7
    assert len(L.sc) == 3
    assert text.count("[") == 3  # three bracket lines
    assert parse_algebra(emit("abelian(5)")).dim == 5
