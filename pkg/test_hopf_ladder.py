"""
Tests for the ladder Hopf algebra, its antipode recursions and S*Y
"""
import pytest
from hypothesis import given, settings, strategies as st

from errors import AlgebraError
from hopf_ladder import (
    COUNIT, Character, D1, D2, D3, HopfElement, TensorElement, antipode, char_convolve, coproduct,
    coproduct_left, coproduct_right, counit, gamma, grading_Y, lie_act, monomial, monomials, s_star_y,
    s_star_y_checked, s_star_y_direct, unit
)
from lie_core import GenIndex
from scalars import Scalar


def test_coproduct_of_generator():
    expected = TensorElement({((), (2,)): 1, ((1,), (1,)): 1, ((2,), ()): 1})
    assert coproduct(gamma(2)) == expected
    assert coproduct(unit()) == TensorElement({((), ()): 1})


def test_antipode_examples():
    g1, g2, g3 = gamma(1), gamma(2), gamma(3)
    assert antipode(g1) == -g1
    assert antipode(g2) == -g2 + g1 * g1
    assert antipode(g3) == -g3 + (g1 * g2).scale(2) - g1 * g1 * g1
    assert antipode(unit()) == unit()


def test_hopf_axioms_small():
    identity = lambda y: y
    memo = {}
    for degree in range(7):
        for mono in monomials(degree):
            x = monomial(mono)
            delta = coproduct(x)
            assert coproduct_left(delta) == coproduct_right(delta)
            assert delta.swap() == delta
            expected = unit().scale(counit(x))
            assert delta.apply(lambda y: antipode(y, memo), identity).multiply() == expected
            assert delta.apply(identity, lambda y: antipode(y, memo)).multiply() == expected


def test_antipode_is_involutive():
    for degree in range(6):
        for mono in monomials(degree):
            x = monomial(mono)
            assert antipode(antipode(x)) == x


@pytest.mark.parametrize("m", range(1, 13))
def test_elimination_recursions(m):
    assert D3(m) == antipode(gamma(m))
    assert D2(m) == grading_Y(gamma(m))


@pytest.mark.parametrize("m", range(13))
def test_d1_is_multiplied_coproduct(m):
    assert D1(m) == coproduct(gamma(m)).multiply()


def test_d3_kills_unit():
    assert D3(0).is_zero()


def test_lie_action_on_generators():
    assert lie_act(GenIndex(1, 2), 3) == gamma(2)
    assert lie_act(GenIndex(0, 3), 2).is_zero()
    assert lie_act(GenIndex(0, 2), 2) == unit()


def test_s_star_y_examples():
    assert s_star_y_checked(1) == gamma(1)
    assert s_star_y_checked(2) == gamma(2).scale(2) - gamma(1) * gamma(1)
    assert s_star_y_direct(unit()).is_zero()


@pytest.mark.parametrize("m", range(1, 11))
def test_s_star_y_matches_direct_convolution(m):
    assert s_star_y(m) == s_star_y_direct(gamma(m))


def test_character_convolution():
    f = Character({1: Scalar(2), 2: Scalar(3)})
    g = Character({1: Scalar(5), 2: Scalar(7)})
    assert char_convolve(f, g, gamma(2)) == 3 + 2 * 5 + 7
    x = gamma(1) * gamma(2) + gamma(3).scale(4)
    assert char_convolve(COUNIT, f, x) == f(x)
    assert char_convolve(f, COUNIT, x) == f(x)


def test_monomial_validation():
    with pytest.raises(AlgebraError):
        HopfElement({(2, 1): 1})
    with pytest.raises(AlgebraError):
        gamma(-1)
    assert gamma(0) == unit()


def test_text_and_json():
    x = gamma(1) * gamma(2) - unit()
    assert str(x) == "-1 + G[1]*G[2]"
    assert HopfElement.from_json(x.to_json()) == x
    assert coproduct(gamma(1)).to_json()['terms'][0] == {'left': [], 'right': [1], 'coeff': '1'}


def test_monomials_are_partitions():
    assert monomials(0) == [()]
    assert monomials(4) == [(1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,)]
    assert len(monomials(12)) == 77
    with pytest.raises(AlgebraError):
        monomials(-1)


ladder_monomials = st.integers(min_value=0, max_value=8).flatmap(lambda d: st.sampled_from(monomials(d)))
hopf_elements = st.lists(st.tuples(ladder_monomials, st.integers(min_value=-3, max_value=3)), max_size=3).map(
    lambda terms: sum((monomial(mono, Scalar(c)) for mono, c in terms), HopfElement()))


@given(ladder_monomials, ladder_monomials)
@settings(max_examples=100, deadline=None)
def test_grading_is_a_derivation(a, b):
    u, v = monomial(a), monomial(b)
    assert grading_Y(u * v) == grading_Y(u) * v + u * grading_Y(v)
    assert grading_Y(monomial((1, 2))) == monomial((1, 2)).scale(3)


@given(hopf_elements, hopf_elements, hopf_elements)
@settings(max_examples=60, deadline=None)
def test_product_is_associative_and_commutative(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert coproduct(x * y) == coproduct(x) * coproduct(y)
