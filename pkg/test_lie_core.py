"""
Tests for the ladder Lie algebra bracket, grading and involution
"""
import pytest
from hypothesis import given, settings, strategies as st

from errors import AlgebraError
from lie_core import (
    GenIndex, LieElement, Part, Z, bracket, bracket_basis, degree, degree_decompose,
    elimination_commutator_residual, generators, in_l_minus, in_l_plus, involution_C,
    is_homogeneous, ladder_identity_residual, project, subalgebra_closed, zero_part_offenders
)
from scalars import Scalar

index = st.integers(min_value=0, max_value=6)
gen_index = st.builds(GenIndex, index, index)
coeff = st.integers(min_value=-3, max_value=3).map(Scalar)
elements = st.lists(st.tuples(gen_index, coeff), min_size=1, max_size=3).map(LieElement)


def test_generator_rejects_negative_index():
    with pytest.raises(AlgebraError):
        GenIndex(-1, 0)


def test_bracket_examples():
    assert bracket(Z(1, 0), Z(0, 1)) == Z(1, 1) - Z(0, 0)
    assert bracket(Z(2, 1), Z(1, 2)) == Z(2, 2) - Z(1, 1)


def test_abelian_shift_subalgebras():
    assert bracket(Z(2, 0), Z(3, 0)).is_zero()
    assert bracket(Z(0, 2), Z(0, 5)).is_zero()


@pytest.mark.parametrize("k", range(1, 21))
def test_ladder_identity(k):
    assert ladder_identity_residual(k).is_zero()


@pytest.mark.parametrize("n", range(0, 12))
def test_elimination_commutator(n):
    assert elimination_commutator_residual(n).is_zero()


def test_antisymmetry_exhaustive_small():
    for a in generators(5):
        for b in generators(5):
            assert bracket_basis(a, b) == -bracket_basis(b, a)


@given(elements, elements, elements)
@settings(max_examples=150, deadline=None)
def test_jacobi(x, y, z):
    total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert total.is_zero()


@given(elements, elements)
@settings(max_examples=150, deadline=None)
def test_bracket_is_bilinear_and_antisymmetric(x, y):
    assert bracket(x, y) == -bracket(y, x)
    assert bracket(x + y, y) == bracket(x, y)
    assert bracket(x.scale(3), y) == bracket(x, y).scale(3)


def test_grading_is_respected():
    for a in generators(4):
        for b in generators(4):
            result = bracket_basis(a, b)
            if result:
                assert degree(result) == a.degree + b.degree


def test_degree_decompose_and_project():
    x = Z(2, 0) + Z(1, 1) - Z(0, 3)
    parts = degree_decompose(x)
    assert list(parts) == [-3, 0, 2]
    assert project(x, Part.PLUS) == Z(2, 0)
    assert project(x, Part.ZERO) == Z(1, 1)
    assert project(x, Part.MINUS) == -Z(0, 3)
    assert not is_homogeneous(x)
    with pytest.raises(AlgebraError):
        degree(x)
    with pytest.raises(AlgebraError):
        degree(LieElement())


@pytest.mark.parametrize("part", list(Part))
def test_parts_are_subalgebras(part):
    assert subalgebra_closed(part, 5) == []


def test_degree_zero_part_is_commutative_and_normalizes_the_others():
    assert zero_part_offenders(10) == []
    for k in range(6):
        for l in range(6):
            assert bracket(Z(k, k), Z(l, l)).is_zero()
    assert project(bracket(Z(3, 1), Z(2, 2)), Part.PLUS) == bracket(Z(3, 1), Z(2, 2))


def test_shift_membership():
    assert in_l_plus(Z(3, 0) + Z(0, 0))
    assert not in_l_plus(Z(1, 1))
    assert in_l_minus(Z(0, 4))


def test_involution():
    assert involution_C(Z(2, 1)) == -Z(1, 2)
    for a in generators(4):
        x = LieElement({a: 1})
        assert involution_C(involution_C(x)) == x
        for b in generators(4):
            y = LieElement({b: 1})
            assert involution_C(bracket(x, y)) == bracket(involution_C(x), involution_C(y))


def test_text_and_json_forms():
    x = Z(1, 1).scale(2) - Z(0, 0)
    assert str(x) == "-Z[0,0] + 2*Z[1,1]"
    assert str(LieElement()) == "0"
    assert str(Z(0, 1, Scalar(1, -2))) == "Z[0,1] - 2i*Z[0,1]"
    assert LieElement.from_json(x.to_json()) == x
