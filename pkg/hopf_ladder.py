"""
Ladder Hopf Algebra - polynomials in the ladder graphs Gamma_k with their Hopf structure

Gamma_0 is identified with the unit. The coproduct is
Delta(Gamma_n) = sum_{j=0}^{n} Gamma_j (x) Gamma_{n-j}, extended
multiplicatively. The Lie algebra acts on the linear span of generators
through Z[n,m] Gamma_k = Gamma_{k-m+n}.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from sympy.utilities.iterables import partitions

from combination import Combination, accumulate
from errors import AlgebraError, ConsistencyError
from lie_core import GenIndex, format_terms
from scalars import Scalar, ZERO, ONE

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
UNIT: Monomial = ()


def merge(a: Monomial, b: Monomial) -> Monomial:
    """Product of two monomials"""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def _check_monomial(key) -> None:
    if not isinstance(key, tuple) or any(not isinstance(k, int) or k < 1 for k in key) \
            or list(key) != sorted(key):
        raise AlgebraError(f"Monomials are sorted tuples of positive ints, got {key!r}")


def _monomial_text(mono: Monomial) -> str:
    if not mono:
        return '1'
    return '*'.join(f"G[{k}]" for k in mono)


class HopfElement(Combination):
    """Polynomial in the ladder generators Gamma_1, Gamma_2, ..."""

    __slots__ = ()

    def _check_key(self, key) -> None:
        _check_monomial(key)

    @staticmethod
    def sort_key(key: Monomial):
        return (sum(key), key)

    def __mul__(self, other):
        if isinstance(other, HopfElement):
            acc: Dict[Monomial, Scalar] = {}
            for a, ca in self._terms.items():
                for b, cb in other._terms.items():
                    accumulate(acc, merge(a, b), ca * cb)
            return HopfElement._from_clean(acc)
        return super().__mul__(other)

    def __str__(self):
        return format_terms(self.items(), _monomial_text)

    def to_json(self) -> Dict[str, Any]:
        return {'terms': [{'monomial': list(mono), 'coeff': str(c)} for mono, c in self.items()]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'HopfElement':
        return cls((tuple(sorted(int(k) for k in t['monomial'])), Scalar.parse(t['coeff']))
                   for t in data['terms'])


class TensorElement(Combination):
    """Element of H (x) H: sum of c * (left monomial, right monomial)"""

    __slots__ = ()

    def _check_key(self, key) -> None:
        if not isinstance(key, tuple) or len(key) != 2:
            raise AlgebraError(f"Tensor keys are monomial pairs, got {key!r}")
        _check_monomial(key[0])
        _check_monomial(key[1])

    @staticmethod
    def sort_key(key):
        left, right = key
        return (sum(left) + sum(right), sum(left), left, right)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            acc: Dict[Tuple[Monomial, Monomial], Scalar] = {}
            for (a1, a2), ca in self._terms.items():
                for (b1, b2), cb in other._terms.items():
                    accumulate(acc, (merge(a1, b1), merge(a2, b2)), ca * cb)
            return TensorElement._from_clean(acc)
        return super().__mul__(other)

    def swap(self) -> 'TensorElement':
        return TensorElement._from_clean({(b, a): c for (a, b), c in self._terms.items()})

    def apply(self, left: Callable[[HopfElement], HopfElement],
              right: Callable[[HopfElement], HopfElement]) -> 'TensorElement':
        """(left (x) right) applied termwise"""
        acc: Dict[Tuple[Monomial, Monomial], Scalar] = {}
        for (a, b), c in self._terms.items():
            for la, ca in left(monomial(a)).items():
                for rb, cb in right(monomial(b)).items():
                    accumulate(acc, (la, rb), c * ca * cb)
        return TensorElement._from_clean(acc)

    def multiply(self) -> HopfElement:
        """The multiplication map m: a (x) b -> ab"""
        acc: Dict[Monomial, Scalar] = {}
        for (a, b), c in self._terms.items():
            accumulate(acc, merge(a, b), c)
        return HopfElement._from_clean(acc)

    def __str__(self):
        return format_terms(self.items(), lambda k: f"{_monomial_text(k[0])} (x) {_monomial_text(k[1])}")

    def to_json(self) -> Dict[str, Any]:
        return {'terms': [{'left': list(a), 'right': list(b), 'coeff': str(c)}
                          for (a, b), c in self.items()]}


def monomial(mono: Monomial, coeff=ONE) -> HopfElement:
    return HopfElement({tuple(sorted(mono)): coeff})


def unit() -> HopfElement:
    return monomial(UNIT)


def gamma(k: int) -> HopfElement:
    """Ladder generator Gamma_k; Gamma_0 is the unit"""
    if k < 0:
        raise AlgebraError(f"Ladder loop number must be non-negative, got {k}")
    return unit() if k == 0 else monomial((k,))


def monomials(degree: int) -> List[Monomial]:
    """Ladder monomials of total loop number degree, i.e. the partitions of degree"""
    if degree < 0:
        raise AlgebraError(f"Degree must be non-negative, got {degree}")
    return sorted(tuple(sorted(k for k, times in parts.items() for _ in range(times)))
                  for parts in partitions(degree))


def _coproduct_generator(k: int) -> TensorElement:
    acc = {}
    for j in range(k + 1):
        acc[((j,) if j else UNIT, (k - j,) if k - j else UNIT)] = ONE
    return TensorElement._from_clean(acc)


def coproduct(x: HopfElement) -> TensorElement:
    """Delta, multiplicative with Delta(Gamma_n) = sum_j Gamma_j (x) Gamma_{n-j}"""
    acc: Dict[Tuple[Monomial, Monomial], Scalar] = {}
    for mono, c in x.items():
        image = TensorElement._from_clean({(UNIT, UNIT): ONE})
        for k in mono:
            image = image * _coproduct_generator(k)
        for key, d in image.items():
            accumulate(acc, key, c * d)
    return TensorElement._from_clean(acc)


def coproduct_left(t: TensorElement) -> Dict[Tuple[Monomial, Monomial, Monomial], Scalar]:
    """(Delta (x) id) as a map into triple tensors"""
    acc: Dict[Tuple[Monomial, Monomial, Monomial], Scalar] = {}
    for (a, b), c in t.items():
        for (a1, a2), d in coproduct(monomial(a)).items():
            accumulate(acc, (a1, a2, b), c * d)
    return acc


def coproduct_right(t: TensorElement) -> Dict[Tuple[Monomial, Monomial, Monomial], Scalar]:
    """(id (x) Delta) as a map into triple tensors"""
    acc: Dict[Tuple[Monomial, Monomial, Monomial], Scalar] = {}
    for (a, b), c in t.items():
        for (b1, b2), d in coproduct(monomial(b)).items():
            accumulate(acc, (a, b1, b2), c * d)
    return acc


def counit(x: HopfElement) -> Scalar:
    """Augmentation: the constant term"""
    return x.coefficient(UNIT)


def antipode(x: HopfElement, memo: Optional[Dict[int, HopfElement]] = None) -> HopfElement:
    """
    Antipode S, an algebra morphism with
    S(Gamma_m) = -Gamma_m - sum_{n=1}^{m-1} S(Gamma_n) Gamma_{m-n}

    Args:
        x: Element to transform
        memo: Optional per-caller cache of S on generators

    Returns:
        S(x)
    """
    memo = {} if memo is None else memo

    def on_generator(m: int) -> HopfElement:
        if m not in memo:
            value = -gamma(m)
            for n in range(1, m):
                value = value - on_generator(n) * gamma(m - n)
            memo[m] = value
        return memo[m]

    def on_monomial(mono: Monomial) -> HopfElement:
        value = unit()
        for k in mono:
            value = value * on_generator(k)
        return value

    return x.map_terms(on_monomial)


def grading_Y(x: HopfElement) -> HopfElement:
    """Degree derivation: each monomial is scaled by its loop number"""
    return HopfElement._from_clean({mono: c * sum(mono) for mono, c in x.items() if sum(mono)})


def lie_act(g: GenIndex, k: int) -> HopfElement:
    """Z[n,m] Gamma_k = Gamma_{k-m+n} when m <= k, else 0"""
    if g.m > k:
        return HopfElement()
    return gamma(k - g.m + g.n)


def D1(m: int) -> HopfElement:
    """D1(Gamma_m) = sum_n Gamma_n Z[0,n](Gamma_m), the sum stopping at n = m"""
    total = HopfElement()
    for n in range(m + 1):
        total = total + gamma(n) * lie_act(GenIndex(0, n), m)
    return total


def D2(m: int) -> HopfElement:
    """D2(Gamma_m) = sum_{k>=1} Z[k,k](Gamma_m); equals m Gamma_m"""
    total = HopfElement()
    for k in range(1, m + 1):
        total = total + lie_act(GenIndex(k, k), m)
    return total


def D3(m: int, memo: Optional[Dict[int, HopfElement]] = None) -> HopfElement:
    """
    D3(Gamma_m) = -Z[0,0](Gamma_m) - sum_n D3(Gamma_n) Z[1,n+1](Gamma_m)

    D3 kills the unit (D3(Gamma_0) = 0), so the recursion reproduces the
    antipode on generators.
    """
    memo = {} if memo is None else memo
    if m == 0:
        return HopfElement()
    if m not in memo:
        value = -lie_act(GenIndex(0, 0), m)
        for n in range(1, m):
            value = value - D3(n, memo) * lie_act(GenIndex(1, n + 1), m)
        memo[m] = value
    return memo[m]


@dataclass(frozen=True)
class Character:
    """
    Algebra morphism H -> scalars given by its values on Gamma_1, Gamma_2, ...

    Unspecified generators map to 0; the unit maps to 1.
    """
    values: Mapping[int, Scalar] = field(default_factory=dict)

    def on_generator(self, k: int) -> Scalar:
        if k == 0:
            return ONE
        return Scalar.coerce(self.values.get(k, ZERO))

    def on_monomial(self, mono: Monomial) -> Scalar:
        value = ONE
        for k in mono:
            value = value * self.on_generator(k)
        return value

    def __call__(self, x: HopfElement) -> Scalar:
        total = ZERO
        for mono, c in x.items():
            total = total + c * self.on_monomial(mono)
        return total


COUNIT = Character({})


def char_convolve(f: Character, g: Character, x: HopfElement) -> Scalar:
    """
    (f * g)(x) = m (f (x) g) Delta (x)

    Evaluated twice: from the coproduct, and on generators as
    sum_n f(Gamma_n) g(Z[0,n] Gamma_m) extended multiplicatively. The
    two must agree.
    """
    via_coproduct = ZERO
    for (a, b), c in coproduct(x).items():
        via_coproduct = via_coproduct + c * f.on_monomial(a) * g.on_monomial(b)

    def on_generator(m: int) -> Scalar:
        total = ZERO
        for n in range(m + 1):
            total = total + f.on_generator(n) * g(lie_act(GenIndex(0, n), m))
        return total

    via_elimination = ZERO
    for mono, c in x.items():
        value = ONE
        for k in mono:
            value = value * on_generator(k)
        via_elimination = via_elimination + c * value
    if via_coproduct != via_elimination:
        raise ConsistencyError("Character convolution paths disagree", via_coproduct, via_elimination)
    return via_coproduct


def convolve(f: Callable[[HopfElement], HopfElement], g: Callable[[HopfElement], HopfElement],
             x: HopfElement) -> HopfElement:
    """m (f (x) g) Delta (x) for linear maps f, g of H"""
    return coproduct(x).apply(f, g).multiply()


def s_star_y_direct(x: HopfElement) -> HopfElement:
    """S*Y = m (S (x) Y) Delta, straight from the Hopf structure"""
    memo: Dict[int, HopfElement] = {}
    return convolve(lambda y: antipode(y, memo), grading_Y, x)


def s_star_y(m: int) -> HopfElement:
    """
    S*Y(Gamma_m) = sum_n D3(Gamma_n) D2(Z[0,n] Gamma_m)

    The n = 0 term is S(1) Y(Gamma_m) = m Gamma_m; the D3 recursion itself
    kills the unit.
    """
    memo: Dict[int, HopfElement] = {}
    total = grading_Y(gamma(m))
    for n in range(1, m + 1):
        total = total + D3(n, memo) * grading_Y(lie_act(GenIndex(0, n), m))
    return total


def s_star_y_checked(m: int) -> HopfElement:
    """s_star_y(m), raising ConsistencyError if it differs from the direct convolution"""
    via_generators = s_star_y(m)
    direct = s_star_y_direct(gamma(m))
    if via_generators != direct:
        raise ConsistencyError(f"S*Y(Gamma_{m}) via the elimination formula", via_generators, direct)
    return direct
