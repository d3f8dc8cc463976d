"""
Lambda Module - symbolic relabelling of the standard module for the shift algebras

Basis labels a(e(k)) (k >= 0) and a(o(k)) (k >= 1) stand for the formal
numbers e(k) = exp(k) and o(k) = -exp(k - 1/2). Only their sign and
exponent are tracked; nothing is ever evaluated numerically.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from combination import Combination, accumulate
from errors import AlgebraError
from heisenberg_virasoro import Side, a_minus, a_plus
from lie_core import GenIndex, LieElement, format_terms
from modules_rep import SVector, act, t
from scalars import Scalar, ONE

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class Parity(str, Enum):
    EVEN = 'even'
    ODD = 'odd'


@dataclass(frozen=True, order=True)
class LambdaBasis:
    """Label a(e(level)) for even parity, a(o(level)) for odd parity"""
    parity: Parity
    level: int

    def __post_init__(self):
        object.__setattr__(self, 'parity', Parity(self.parity))
        if self.parity is Parity.EVEN and self.level < 0:
            raise AlgebraError(f"Even labels need level >= 0, got e({self.level})")
        if self.parity is Parity.ODD and self.level < 1:
            raise AlgebraError(f"Odd labels need level >= 1, got o({self.level})")

    def __str__(self):
        letter = 'e' if self.parity is Parity.EVEN else 'o'
        return f"a({letter}({self.level}))"


# A formal number: (sign, exponent) for sign * exp(exponent)
Symbol = Tuple[int, Fraction]


def _symbol(label: LambdaBasis) -> Symbol:
    if label.parity is Parity.EVEN:
        return (1, Fraction(label.level))
    return (-1, label.level - HALF)


def _label(symbol: Symbol) -> Optional[LambdaBasis]:
    """Basis label for a formal number, or None when it names no basis vector"""
    sign, exponent = symbol
    if sign == 1 and exponent.denominator == 1 and exponent >= 0:
        return LambdaBasis(Parity.EVEN, int(exponent))
    if sign == -1 and exponent.denominator == 2 and exponent + HALF >= 1:
        return LambdaBasis(Parity.ODD, int(exponent + HALF))
    return None


def _times(a: Symbol, b: Symbol) -> Symbol:
    return (a[0] * b[0], a[1] + b[1])


class LambdaElement(Combination):
    """Finite sum of c * a(xi(k))"""

    __slots__ = ()

    def _check_key(self, key) -> None:
        if not isinstance(key, LambdaBasis):
            raise AlgebraError(f"LambdaElement keys must be LambdaBasis, got {key!r}")

    @staticmethod
    def sort_key(key: LambdaBasis):
        return (key.parity.value, key.level)

    def __str__(self):
        return format_terms(self.items(), str)

    def to_json(self) -> Dict[str, Any]:
        return {'terms': [{'parity': b.parity.value, 'level': b.level, 'coeff': str(c)}
                          for b, c in self.items()]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'LambdaElement':
        return cls((LambdaBasis(Parity(u['parity']), int(u['level'])), Scalar.parse(u['coeff']))
                   for u in data['terms'])


def even(k: int) -> LambdaBasis:
    return LambdaBasis(Parity.EVEN, k)


def odd(k: int) -> LambdaBasis:
    return LambdaBasis(Parity.ODD, k)


UNIT_LABEL = LambdaBasis(Parity.EVEN, 0)


def bullet(a: LambdaBasis, b: LambdaBasis) -> LambdaBasis:
    """
    a(xi(n)) . a(xi(m)) = a(xi(n) xi(m))

    e(n)e(m) = e(n+m), e(n)o(m) = o(n+m), o(n)o(m) = e(n+m-1).
    """
    label = _label(_times(_symbol(a), _symbol(b)))
    if label is None:
        raise AlgebraError(f"Product of {a} and {b} is not a basis label")
    return label


def lambda_product(u: LambdaElement, w: LambdaElement) -> LambdaElement:
    acc: Dict[LambdaBasis, Scalar] = {}
    for a, ca in u.items():
        for b, cb in w.items():
            accumulate(acc, bullet(a, b), ca * cb)
    return LambdaElement._from_clean(acc)


def phi_iso(v: SVector) -> LambdaElement:
    """t_{2k} -> a(e(k)), t_{2k-1} -> a(o(k))"""
    return LambdaElement._from_clean({
        (even(k // 2) if k % 2 == 0 else odd((k + 1) // 2)): c for k, c in v.items()
    })


def phi_inv(w: LambdaElement) -> SVector:
    return SVector._from_clean({
        (2 * b.level if b.parity is Parity.EVEN else 2 * b.level - 1): c for b, c in w.items()
    })


def _factor(side: Side, n: int) -> Symbol:
    """Multiplier attached to Z_n on the given side"""
    if side is Side.PLUS:
        # e(n) for n >= 0, o(|n|) for n < 0
        return (1, Fraction(n)) if n >= 0 else (-1, Fraction(-n) - HALF)
    # e~(n) = exp(-n) for n >= 0, o~(|n|) = -exp(-|n| + 1/2) for n < 0
    return (1, Fraction(-n)) if n >= 0 else (-1, Fraction(n) + HALF)


def lambda_act(side: Side, n: int, w: LambdaElement) -> LambdaElement:
    """
    Action of Z_n^+ or Z_n^- on Lambda by multiplication with the attached formal number

    On the - side a product that names no basis label (level out of
    range) gives 0, mirroring Z[0,m] t_k = 0 for m > k.
    """
    side = Side(side)
    factor = _factor(side, n)
    acc: Dict[LambdaBasis, Scalar] = {}
    for b, c in w.items():
        label = _label(_times(factor, _symbol(b)))
        if label is None:
            continue
        accumulate(acc, label, c)
    return LambdaElement._from_clean(acc)


def translate(g: GenIndex) -> Tuple[Side, int]:
    """Side and integer label of a generator of l+ or l- under a+ / a-"""
    if g.m == 0:
        return Side.PLUS, a_plus(g).n
    if g.n == 0:
        return Side.MINUS, a_minus(g).n
    raise AlgebraError(f"{g} lies in neither l+ nor l-")


def diagram_check(g: GenIndex, k: int) -> bool:
    """phi(g t_k) equals the translated label acting on phi(t_k)"""
    side, label = translate(g)
    via_module = phi_iso(act(LieElement({g: ONE}), t(k)))
    via_lambda = lambda_act(side, label, phi_iso(t(k)))
    return via_module == via_lambda


def lambda_commute(side: Side, n1: int, n2: int, w: LambdaElement) -> bool:
    """Operators for two labels of one side commute on w"""
    return lambda_act(side, n1, lambda_act(side, n2, w)) == lambda_act(side, n2, lambda_act(side, n1, w))
