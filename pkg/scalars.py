"""
Exact Gaussian-rational scalars

Every coefficient in the package is a Scalar: a pair of reduced
fractions (re, im). There is no floating point anywhere.
"""
import logging
from fractions import Fraction
from typing import Union

import pyparsing as pp
import sympy

from errors import ParseError

logger = logging.getLogger(__name__)


def _literal_grammar() -> pp.ParserElement:
    """a, a/b, [+-]a/b [*] i, i and a/b [+-] c/d [*] i; a bare i counts as 1*i"""
    number = pp.Regex(r"\d+(?:/\d+)?")
    sign = pp.one_of("+ -")
    unit = pp.Suppress(pp.Optional("*")) + pp.Suppress(pp.Literal("i"))
    imaginary = pp.Optional(number, default="1")("im") + unit
    real = pp.Combine(pp.Optional(sign) + number)("re")
    return (pp.Optional(sign, default="+")("sign") + imaginary) | (real + pp.Optional(sign("sign") + imaginary))


_LITERAL = _literal_grammar()


class Scalar:
    """
    Exact complex number with rational real and imaginary parts

    Instances are immutable; arithmetic returns new values and accepts
    ints and Fractions on either side.
    """

    __slots__ = ('re', 'im')

    def __init__(self, re_part: Union[int, Fraction] = 0, im_part: Union[int, Fraction] = 0):
        object.__setattr__(self, 're', Fraction(re_part))
        object.__setattr__(self, 'im', Fraction(im_part))

    @classmethod
    def _make(cls, re_part: Fraction, im_part: Fraction) -> 'Scalar':
        obj = object.__new__(cls)
        object.__setattr__(obj, 're', re_part)
        object.__setattr__(obj, 'im', im_part)
        return obj

    @classmethod
    def coerce(cls, value) -> 'Scalar':
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._make(Fraction(value), _F0)
        raise TypeError(f"Cannot use {type(value).__name__} as an exact scalar")

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.re, self.im))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.im and not other.im:
            return Scalar._make(self.re * other.re, _F0)
        return Scalar._make(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> 'Scalar':
        return Scalar._make(self.re, -self.im)

    def inverse(self) -> 'Scalar':
        if self.is_zero():
            raise ZeroDivisionError("Scalar zero has no inverse")
        if not self.im:
            return Scalar._make(1 / self.re, _F0)
        norm = self.re * self.re + self.im * self.im
        return Scalar._make(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison and hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- conversion -------------------------------------------------------

    def to_sympy(self):
        return sympy.Rational(self.re.numerator, self.re.denominator) + \
            sympy.I * sympy.Rational(self.im.numerator, self.im.denominator)

    def __str__(self):
        """Canonical serialization: 'a/b' when real, 'a/b+c/d*i' otherwise"""
        if not self.im:
            return str(self.re)
        sign = '-' if self.im < 0 else '+'
        return f"{self.re}{sign}{abs(self.im)}*i"

    def __repr__(self):
        return f"Scalar('{self}')"

    @classmethod
    def parse(cls, text: str) -> 'Scalar':
        """
        Parse an exact scalar literal

        Accepts '3', '-1/2', '2i', '1/3*i', '1/2+3/4*i' and '1/2-i'.

        Args:
            text: Literal to parse

        Returns:
            Parsed Scalar
        """
        try:
            tokens = _LITERAL.parse_string(text, parse_all=True)
        except pp.ParseBaseException as e:
            raise ParseError(f"Malformed scalar literal '{text}'", e.loc, text) from None
        try:
            real = Fraction(tokens.get("re", "0"))
            imag = _F0
            if "im" in tokens:
                imag = Fraction(tokens["im"])
                if tokens.get("sign") == "-":
                    imag = -imag
        except ZeroDivisionError:
            raise ParseError(f"Zero denominator in scalar literal '{text}'", 0, text)
        return cls._make(real, imag)


_F0 = Fraction(0)
ZERO = Scalar._make(_F0, _F0)
ONE = Scalar._make(Fraction(1), _F0)
I = Scalar._make(_F0, Fraction(1))
