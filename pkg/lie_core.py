"""
Lie Core - the insertion-elimination Lie algebra of ladder graphs

Elements are finite combinations of generators Z[n,m] (insert an n-loop
ladder, eliminate an m-loop ladder). The bracket is the six-term ladder
formula; the algebra is Z-graded by n - m.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Tuple

from combination import Combination, accumulate
from errors import AlgebraError
from scalars import Scalar, ONE

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GenIndex:
    """Index pair (n, m) of the generator Z[n,m]"""
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise AlgebraError(f"Generator indices must be non-negative, got Z[{self.n},{self.m}]")

    @property
    def degree(self) -> int:
        return self.n - self.m

    def __str__(self):
        return f"Z[{self.n},{self.m}]"


class Part(str, Enum):
    """Summands of L = L+ (+) L0 (+) L-"""
    PLUS = 'plus'
    ZERO = 'zero'
    MINUS = 'minus'


def format_terms(items: Iterable[Tuple[Any, Scalar]], atom) -> str:
    """
    Render terms in the expression grammar, e.g. '-Z[0,0] + 2*Z[1,1]'

    Gaussian coefficients are split into a real and an imaginary term so
    the text re-parses to the same element.

    Args:
        items: (key, coefficient) pairs in display order
        atom: Function rendering a key as an atom string

    Returns:
        Text form, '0' for the empty sum
    """
    pieces: List[Tuple[bool, str]] = []
    for key, coeff in items:
        name = atom(key)
        for part, suffix in ((coeff.re, ''), (coeff.im, 'i')):
            if not part:
                continue
            negative = part < 0
            magnitude = -part if negative else part
            if magnitude == 1 and not suffix:
                body = name
            else:
                body = f"{magnitude}{suffix}*{name}"
            pieces.append((negative, body))
    if not pieces:
        return '0'
    out = ('-' if pieces[0][0] else '') + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (' - ' if negative else ' + ') + body
    return out


class LieElement(Combination):
    """Element of the ladder Lie algebra: a finite sum of c * Z[n,m]"""

    __slots__ = ()

    def _check_key(self, key) -> None:
        if not isinstance(key, GenIndex):
            raise AlgebraError(f"LieElement keys must be GenIndex, got {key!r}")

    @staticmethod
    def sort_key(key: GenIndex):
        return (key.n, key.m)

    def __str__(self):
        return format_terms(self.items(), str)

    def to_json(self) -> Dict[str, Any]:
        return {'terms': [{'n': g.n, 'm': g.m, 'coeff': str(c)} for g, c in self.items()]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'LieElement':
        return cls((GenIndex(int(t['n']), int(t['m'])), Scalar.parse(t['coeff'])) for t in data['terms'])


def Z(n: int, m: int, coeff=ONE) -> LieElement:
    """Single generator c * Z[n,m]"""
    return LieElement({GenIndex(n, m): coeff})


def theta(d: int) -> int:
    """Step function of the bracket: 1 if d >= 0, else 0"""
    return 1 if d >= 0 else 0


def delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def bracket_basis(a: GenIndex, b: GenIndex) -> LieElement:
    """
    Bracket of two generators

    [Z(n,m), Z(l,s)] = T(l-m) Z(l-m+n, s) - T(s-n) Z(l, s-n+m)
                     - T(n-s) Z(n-s+l, m) + T(m-l) Z(n, m-l+s)
                     - d(m,l) Z(n,s) + d(n,s) Z(l,m)

    Args:
        a: Index (n, m) of the left generator
        b: Index (l, s) of the right generator

    Returns:
        Canonicalized LieElement
    """
    n, m = a.n, a.m
    l, s = b.n, b.m
    acc: Dict[GenIndex, Scalar] = {}
    six_terms = (
        (theta(l - m), 1, (l - m + n, s)),
        (theta(s - n), -1, (l, s - n + m)),
        (theta(n - s), -1, (n - s + l, m)),
        (theta(m - l), 1, (n, m - l + s)),
        (delta(m, l), -1, (n, s)),
        (delta(n, s), 1, (l, m)),
    )
    for guard, sign, (p, q) in six_terms:
        if not guard:
            continue
        # guards keep indices non-negative; GenIndex re-checks
        accumulate(acc, GenIndex(p, q), Scalar(sign))
    return LieElement._from_clean(acc)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Bilinear extension of bracket_basis"""
    acc: Dict[GenIndex, Scalar] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            weight = ca * cb
            for g, c in bracket_basis(a, b).items():
                accumulate(acc, g, weight * c)
    return LieElement._from_clean(acc)


def degree_decompose(x: LieElement) -> Dict[int, LieElement]:
    """
    Split x into homogeneous components l_d, d = n - m

    Returns:
        Map degree -> component, ordered by degree; empty for x = 0
    """
    parts: Dict[int, Dict[GenIndex, Scalar]] = {}
    for g, c in x.items():
        parts.setdefault(g.degree, {})[g] = c
    return {d: LieElement._from_clean(parts[d]) for d in sorted(parts)}


def is_homogeneous(x: LieElement) -> bool:
    return len(degree_decompose(x)) <= 1


def degree(x: LieElement) -> int:
    parts = degree_decompose(x)
    if len(parts) != 1:
        raise AlgebraError(f"Degree is defined for non-zero homogeneous elements only, got {x}")
    return next(iter(parts))


def project(x: LieElement, part: Part) -> LieElement:
    """Component of x in L+ (degree > 0), L0 (degree 0) or L- (degree < 0)"""
    part = Part(part)
    if part is Part.PLUS:
        return x.filter(lambda g: g.degree > 0)
    if part is Part.ZERO:
        return x.filter(lambda g: g.degree == 0)
    return x.filter(lambda g: g.degree < 0)


def involution_C(x: LieElement) -> LieElement:
    """Linear extension of Z[n,m] -> -Z[m,n]"""
    return LieElement._from_clean({GenIndex(g.m, g.n): -c for g, c in x.items()})


def in_l_plus(x: LieElement) -> bool:
    """Membership in the abelian subalgebra spanned by Z[n,0]"""
    return all(g.m == 0 for g in x.support())


def in_l_minus(x: LieElement) -> bool:
    """Membership in the abelian subalgebra spanned by Z[0,n]"""
    return all(g.n == 0 for g in x.support())


def generators(bound: int) -> List[GenIndex]:
    """All GenIndex with both indices <= bound, in lexicographic order"""
    return [GenIndex(n, m) for n in range(bound + 1) for m in range(bound + 1)]


def subalgebra_closed(part: Part, bound: int) -> List[Tuple[GenIndex, GenIndex]]:
    """
    Check that L+, L0 or L- is closed under the bracket

    Args:
        part: Which summand to test
        bound: Largest generator index used

    Returns:
        Offending generator pairs (empty when closed)
    """
    part = Part(part)
    members = [g for g in generators(bound) if project(LieElement({g: 1}), part)]
    offenders = []
    for a in members:
        for b in members:
            result = bracket_basis(a, b)
            if result != project(result, part):
                offenders.append((a, b))
    return offenders


def zero_part_offenders(bound: int) -> List[Tuple[GenIndex, GenIndex]]:
    """
    Pairs breaking [L0, L0] = 0, [L+, L0] in L+ or [L-, L0] in L-

    Every generator with indices <= bound is bracketed with every degree
    zero generator Z[k,k], k <= bound.
    """
    offenders = []
    for h in (GenIndex(k, k) for k in range(bound + 1)):
        for a in generators(bound):
            result = bracket_basis(a, h)
            if a.degree == 0:
                ok = not result
            else:
                ok = result == project(result, Part.PLUS if a.degree > 0 else Part.MINUS)
            if not ok:
                offenders.append((a, h))
    return offenders


def ladder_identity_residual(k: int) -> LieElement:
    """[Z(k,0), Z(0,k)] + Z(0,0) - Z(k,k); zero for every k >= 1"""
    return bracket(Z(k, 0), Z(0, k)) + Z(0, 0) - Z(k, k)


def elimination_commutator_residual(n: int) -> LieElement:
    """[Z(1,0), Z(0,n+1)] + Z(0,n) - Z(1,n+1); zero for every n >= 0"""
    return bracket(Z(1, 0), Z(0, n + 1)) + Z(0, n) - Z(1, n + 1)
