"""
Tests for exact Gaussian-rational scalars and sparse combinations
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from combination import Combination
from errors import ParseError
from scalars import Scalar, ZERO, ONE, I

fractions = st.fractions(max_denominator=12).filter(lambda f: abs(f) < 50)
scalars = st.builds(Scalar, fractions, fractions)


def test_parse_literals():
    assert Scalar.parse("3") == Scalar(3)
    assert Scalar.parse("-1/2") == Scalar(Fraction(-1, 2))
    assert Scalar.parse("2i") == Scalar(0, 2)
    assert Scalar.parse("1/3*i") == Scalar(0, Fraction(1, 3))
    assert Scalar.parse("1/2+3/4*i") == Scalar(Fraction(1, 2), Fraction(3, 4))
    assert Scalar.parse("1/2-i") == Scalar(Fraction(1, 2), -1)
    assert Scalar.parse("i") == I


@pytest.mark.parametrize("text, expected", [
    ("10i", Scalar(0, 10)),
    ("20*i", Scalar(0, 20)),
    ("100i", Scalar(0, 100)),
    ("1/20i", Scalar(0, Fraction(1, 20))),
    ("3/10*i", Scalar(0, Fraction(3, 10))),
    ("0+10*i", Scalar(0, 10)),
    ("-30-10*i", Scalar(-30, -10)),
    ("-i", Scalar(0, -1)),
])
def test_parse_imaginary_parts_ending_in_zero(text, expected):
    assert Scalar.parse(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1/", "1//2", "2**i"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        Scalar.parse(text)


def test_parse_rejects_zero_denominator():
    with pytest.raises(ParseError):
        Scalar.parse("1/0")


def test_str_is_canonical():
    assert str(Scalar(Fraction(4, 6))) == "2/3"
    assert str(Scalar(1, -1)) == "1-1*i"
    assert str(Scalar(0, Fraction(1, 2))) == "0+1/2*i"


@given(scalars)
@settings(max_examples=200)
def test_str_round_trips(x):
    assert Scalar.parse(str(x)) == x


@given(scalars, scalars, scalars)
@settings(max_examples=100)
def test_field_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    if b:
        assert (a / b) * b == a


def test_i_squared_is_minus_one():
    assert I * I == Scalar(-1)
    assert I ** 4 == ONE
    assert I ** -1 == -I


def test_scalars_are_immutable():
    with pytest.raises(AttributeError):
        ONE.re = Fraction(2)


def test_equality_with_python_numbers():
    assert Scalar(3) == 3
    assert Scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert Scalar(1, 1) != 1
    assert not ZERO


def test_coerce_rejects_floats():
    with pytest.raises(TypeError):
        Scalar.coerce(0.5)


def test_combination_drops_zero_terms():
    x = Combination({'a': 1, 'b': 0})
    y = Combination([('a', 1), ('a', -1)])
    assert x.support() == ['a']
    assert y.is_zero()
    assert x - x == Combination()


def test_combination_scaling():
    x = Combination({'a': 2})
    assert (x * Fraction(1, 2)).coefficient('a') == ONE
    assert (3 * x).coefficient('a') == Scalar(6)
    assert x.scale(0).is_zero()
