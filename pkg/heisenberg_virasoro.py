"""
Heisenberg and Virasoro - central extension of the shift algebras and its Fock module

l+ = span{Z[n,0]} and l- = span{Z[0,n]} are relabelled over the
integers, centrally extended by the cocycle c(Z_n, Z_m) = n delta(n,-m),
and realized on polynomials in b_1, b_2, ...: Z_{-n} multiplies by b_n,
Z_n acts as n d/db_n, Z_0 as mu and the central element as 1.
"""
import logging
from bisect import insort
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from sympy.utilities.iterables import partitions

from combination import Combination, accumulate
from errors import AlgebraError
from lie_core import GenIndex, LieElement, format_terms
from scalars import Scalar, ZERO, ONE, I

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


class Side(str, Enum):
    PLUS = '+'
    MINUS = '-'


@dataclass(frozen=True, order=True)
class HeisLabel:
    """Symbol Z_n^+ or Z_n^- with integer label n"""
    side: Side
    n: int

    def __str__(self):
        return f"Z{self.side.value}[{self.n}]"


class _Central:
    """The central element C of the Heisenberg algebra"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_Central, ())

    def __str__(self):
        return 'C'

    __repr__ = __str__


CENTRAL = _Central()


class HeisenbergElement(Combination):
    """Element sum c_a Z_a + c C of a Heisenberg algebra"""

    __slots__ = ()

    def _check_key(self, key) -> None:
        if key is not CENTRAL and not isinstance(key, HeisLabel):
            raise AlgebraError(f"Heisenberg keys must be HeisLabel or CENTRAL, got {key!r}")

    @staticmethod
    def sort_key(key):
        if key is CENTRAL:
            return (1, '', 0)
        return (0, key.side.value, key.n)

    @property
    def central(self) -> Scalar:
        return self.coefficient(CENTRAL)

    @property
    def terms(self) -> 'HeisenbergElement':
        return self.filter(lambda key: key is not CENTRAL)

    def sides(self) -> set:
        return {key.side for key in self.support() if key is not CENTRAL}

    def __str__(self):
        return format_terms(self.items(), str)

    def to_json(self) -> Dict[str, Any]:
        return {
            'terms': [{'side': k.side.value, 'n': k.n, 'coeff': str(c)}
                      for k, c in self.items() if k is not CENTRAL],
            'central': str(self.central),
        }


def heis(side: Union[Side, str], n: int, coeff=ONE) -> HeisenbergElement:
    return HeisenbergElement({HeisLabel(Side(side), n): coeff})


def central(coeff=ONE) -> HeisenbergElement:
    return HeisenbergElement({CENTRAL: coeff})


# -- relabellings a+, a- and d ----------------------------------------------

def _interleave(k: int) -> int:
    """0, 1, 2, 3, 4, ... -> 0, -1, 1, -2, 2, ..."""
    return k // 2 if k % 2 == 0 else -((k + 1) // 2)


def _deinterleave(label: int) -> int:
    return 2 * label if label >= 0 else -2 * label - 1


def a_plus(g: GenIndex) -> HeisLabel:
    """Z[2n,0] -> Z_n^+ and Z[2n-1,0] -> Z_{-n}^+"""
    if g.m != 0:
        raise AlgebraError(f"{g} is not in l+ (needs m = 0)")
    return HeisLabel(Side.PLUS, _interleave(g.n))


def a_minus(g: GenIndex) -> HeisLabel:
    """Z[0,2n] -> Z_n^- and Z[0,2n-1] -> Z_{-n}^-"""
    if g.n != 0:
        raise AlgebraError(f"{g} is not in l- (needs n = 0)")
    return HeisLabel(Side.MINUS, _interleave(g.m))


def a_plus_inv(label: HeisLabel) -> GenIndex:
    if label.side is not Side.PLUS:
        raise AlgebraError(f"{label} is not a + label")
    return GenIndex(_deinterleave(label.n), 0)


def a_minus_inv(label: HeisLabel) -> GenIndex:
    if label.side is not Side.MINUS:
        raise AlgebraError(f"{label} is not a - label")
    return GenIndex(0, _deinterleave(label.n))


def a_plus_element(x: LieElement) -> HeisenbergElement:
    return HeisenbergElement((a_plus(g), c) for g, c in x.items())


def a_minus_element(x: LieElement) -> HeisenbergElement:
    return HeisenbergElement((a_minus(g), c) for g, c in x.items())


def d_map(label: HeisLabel) -> HeisLabel:
    """Canonical isomorphism Z_n^+ -> Z_n^-"""
    if label.side is not Side.PLUS:
        raise AlgebraError(f"d is defined on + labels, got {label}")
    return HeisLabel(Side.MINUS, label.n)


def d_element(x: HeisenbergElement) -> HeisenbergElement:
    return HeisenbergElement((d_map(k) if k is not CENTRAL else k, c) for k, c in x.items())


# -- cocycle and central extension ------------------------------------------

def cocycle(a: HeisLabel, b: HeisLabel) -> Scalar:
    """c(Z_n, Z_m) = n delta(n, -m) on labels of the same side"""
    if a.side is not b.side:
        raise AlgebraError(f"Cocycle needs labels of one side, got {a} and {b}")
    return Scalar(a.n) if a.n == -b.n else ZERO


def cocycle_element(x: HeisenbergElement, y: HeisenbergElement) -> Scalar:
    """Bilinear extension of cocycle; central parts pair to zero"""
    value = ZERO
    for a, ca in x.items():
        if a is CENTRAL:
            continue
        for b, cb in y.items():
            if b is CENTRAL:
                continue
            value = value + ca * cb * cocycle(a, b)
    return value


def abelian_bracket(x: HeisenbergElement, y: HeisenbergElement) -> HeisenbergElement:
    """Bracket of l+- before the extension: identically zero"""
    if len(x.sides() | y.sides()) > 1:
        raise AlgebraError("Bracket of elements from different sides")
    return HeisenbergElement()


def heis_bracket(x: HeisenbergElement, y: HeisenbergElement) -> HeisenbergElement:
    """[Z_n, Z_m] = n delta(n,-m) C and [Z_n, C] = 0, extended bilinearly"""
    if len(x.sides() | y.sides()) > 1:
        raise AlgebraError("Heisenberg bracket of elements from different sides")
    return central(cocycle_element(x, y))


# -- Fock module -------------------------------------------------------------

@dataclass(frozen=True)
class FockConfig:
    """Eigenvalue mu of Z_0 and deformation parameter lam of the Virasoro operators"""
    mu: Scalar = ZERO
    lam: Scalar = ZERO

    def __post_init__(self):
        object.__setattr__(self, 'mu', Scalar.coerce(self.mu))
        object.__setattr__(self, 'lam', Scalar.coerce(self.lam))


class FockVector(Combination):
    """Polynomial in b_1, b_2, ... ; a monomial is the sorted tuple of its variable indices"""

    __slots__ = ()

    def _check_key(self, key) -> None:
        if not isinstance(key, tuple) or any(not isinstance(k, int) or k < 1 for k in key) \
                or list(key) != sorted(key):
            raise AlgebraError(f"Fock monomials are sorted tuples of positive ints, got {key!r}")

    @staticmethod
    def sort_key(key: Monomial):
        return (sum(key), key)

    def max_degree(self) -> int:
        return max((sum(mono) for mono in self.support()), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(mono) for mono in self.support()}) <= 1

    def __str__(self):
        return format_terms(self.items(), _monomial_text)

    def to_json(self) -> Dict[str, Any]:
        return {'terms': [{'monomial': list(mono), 'coeff': str(c)} for mono, c in self.items()]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'FockVector':
        return cls((tuple(sorted(int(k) for k in t['monomial'])), Scalar.parse(t['coeff']))
                   for t in data['terms'])


def _monomial_text(mono: Monomial) -> str:
    if not mono:
        return '1'
    return '*'.join(f"b[{k}]" for k in mono)


def vacuum() -> FockVector:
    return FockVector({(): ONE})


def fock_monomial(*indices: int) -> FockVector:
    return FockVector({tuple(sorted(indices)): ONE})


def fock_basis(degree: int) -> List[Monomial]:
    """All monomials of the given Fock degree, one per partition"""
    out = []
    for parts in partitions(degree):
        mono: List[int] = []
        for part, multiplicity in sorted(parts.items()):
            mono.extend([part] * multiplicity)
        out.append(tuple(mono))
    return sorted(out)


def _apply_label(cfg: FockConfig, n: int, terms: Dict[Monomial, Scalar]) -> Dict[Monomial, Scalar]:
    """Z_n on a raw term dict"""
    out: Dict[Monomial, Scalar] = {}
    if n == 0:
        if not cfg.mu:
            return out
        for mono, c in terms.items():
            accumulate(out, mono, c * cfg.mu)
    elif n < 0:
        for mono, c in terms.items():
            new = list(mono)
            insort(new, -n)
            accumulate(out, tuple(new), c)
    else:
        for mono, c in terms.items():
            count = mono.count(n)
            if not count:
                continue
            pos = mono.index(n)
            accumulate(out, mono[:pos] + mono[pos + 1:], c * (n * count))
    return out


def fock_apply(cfg: FockConfig, g: Union[HeisLabel, _Central], v: FockVector) -> FockVector:
    """
    Act with a Heisenberg generator on a Fock vector

    Args:
        cfg: Fock parameters (mu is the Z_0 eigenvalue)
        g: Label Z_n (either side) or CENTRAL
        v: Vector to act on

    Returns:
        Image vector
    """
    if g is CENTRAL:
        return v
    return FockVector._from_clean(_apply_label(cfg, g.n, dict(v.items())))


def central_charge(cfg: FockConfig) -> Scalar:
    return ONE + 12 * cfg.lam * cfg.lam


def _virasoro_monomial(cfg: FockConfig, n: int, mono: Monomial, window: Optional[int]) -> Dict[Monomial, Scalar]:
    source = {mono: ONE}
    out: Dict[Monomial, Scalar] = {}
    deg = sum(mono)
    if n == 0:
        # L_0 = (mu^2 + lam^2)/2 + sum_{k>0} Z_{-k} Z_k
        constant = (cfg.mu * cfg.mu + cfg.lam * cfg.lam) * Fraction(1, 2)
        if constant:
            accumulate(out, mono, constant)
        top = window if window is not None else deg
        for k in range(1, top + 1):
            for key, c in _apply_label(cfg, -k, _apply_label(cfg, k, source)).items():
                accumulate(out, key, c)
        return out
    # L_n = 1/2 sum_j Z_{-j} Z_{j+n} + i lam n Z_n; the two factors commute for n != 0
    width = window if window is not None else abs(n) + deg
    half = Scalar(Fraction(1, 2))
    for j in range(-width, width + 1):
        inner = _apply_label(cfg, j + n, source)
        if not inner:
            continue
        for key, c in _apply_label(cfg, -j, inner).items():
            accumulate(out, key, c * half)
    linear = I * cfg.lam * n
    if linear:
        for key, c in _apply_label(cfg, n, source).items():
            accumulate(out, key, c * linear)
    return out


def virasoro_L(cfg: FockConfig, n: int, v: FockVector, window: Optional[int] = None,
               memo: Optional[Dict[Tuple[int, Monomial], Dict[Monomial, Scalar]]] = None) -> FockVector:
    """
    Apply the Virasoro operator L_n to a Fock vector

    Args:
        cfg: Fock parameters
        n: Virasoro index
        v: Vector to act on
        window: Summation half-width; defaults to |n| + degree per monomial
        memo: Optional per-caller cache of monomial images

    Returns:
        L_n v
    """
    out: Dict[Monomial, Scalar] = {}
    for mono, c in v.items():
        cache_key = (n, mono)
        if memo is not None and window is None and cache_key in memo:
            image = memo[cache_key]
        else:
            image = _virasoro_monomial(cfg, n, mono, window)
            if memo is not None and window is None:
                memo[cache_key] = image
        for key, d in image.items():
            accumulate(out, key, c * d)
    return FockVector._from_clean(out)


def virasoro_residual(cfg: FockConfig, n: int, m: int, v: FockVector,
                      memo: Optional[Dict] = None) -> FockVector:
    """
    ([L_n, L_m] - (n-m) L_{n+m} - delta(n,-m) (n^3-n)/12 (1+12 lam^2)) v

    The relation holds exactly when the result is the zero vector.
    """
    commutator = virasoro_L(cfg, n, virasoro_L(cfg, m, v, memo=memo), memo=memo) \
        - virasoro_L(cfg, m, virasoro_L(cfg, n, v, memo=memo), memo=memo)
    residual = commutator - virasoro_L(cfg, n + m, v, memo=memo).scale(n - m)
    if n == -m:
        anomaly = Scalar(Fraction(n ** 3 - n, 12)) * central_charge(cfg)
        residual = residual - v.scale(anomaly)
    return residual


def residual_report(cfg: FockConfig, n: int, m: int, max_degree: int,
                    memo: Optional[Dict] = None) -> List[Dict[str, Any]]:
    """
    One record per Fock degree: whether the Virasoro relation holds on every monomial of that degree

    Returns:
        Records {n, m, mu, lambda, degree, pass[, residual]}; residual is the first
        non-zero image found, with the monomial it came from
    """
    memo = {} if memo is None else memo
    records = []
    for degree in range(max_degree + 1):
        record: Dict[str, Any] = {
            'n': n, 'm': m, 'mu': str(cfg.mu), 'lambda': str(cfg.lam),
            'degree': degree, 'pass': True,
        }
        for mono in fock_basis(degree):
            residual = virasoro_residual(cfg, n, m, FockVector({mono: ONE}), memo)
            if residual:
                record['pass'] = False
                record['residual'] = {'monomial': list(mono), 'value': residual.to_json()}
                break
        records.append(record)
    return records
