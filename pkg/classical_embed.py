"""
Classical Embedding - gl+(infinity), sl+(infinity) and their image in the ladder Lie algebra

phi(E[i,j]) = Z[i,j] - Z[i+1,j+1] embeds the matrix units; the
Chevalley generators and simple co-roots of sl+(infinity) come along.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Tuple

from combination import Combination, accumulate
from errors import AlgebraError, ConsistencyError
from lie_core import LieElement, Z, bracket, format_terms
from modules_rep import matrices_independent
from scalars import Scalar, ZERO

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GlIndex:
    """Matrix unit E[i,j] of gl+(infinity)"""
    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise AlgebraError(f"Matrix unit indices must be non-negative, got E[{self.i},{self.j}]")

    def __str__(self):
        return f"E[{self.i},{self.j}]"


class TriangularPart(str, Enum):
    N_PLUS = 'n_plus'
    H = 'h'
    N_MINUS = 'n_minus'


class GlElement(Combination):
    """Finitely supported matrix: a finite sum of c * E[i,j]"""

    __slots__ = ()

    def _check_key(self, key) -> None:
        if not isinstance(key, GlIndex):
            raise AlgebraError(f"GlElement keys must be GlIndex, got {key!r}")

    @staticmethod
    def sort_key(key: GlIndex):
        return (key.i, key.j)

    def __str__(self):
        return format_terms(self.items(), str)

    def to_json(self) -> Dict[str, Any]:
        return {'terms': [{'i': u.i, 'j': u.j, 'coeff': str(c)} for u, c in self.items()]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'GlElement':
        return cls((GlIndex(int(u['i']), int(u['j'])), Scalar.parse(u['coeff'])) for u in data['terms'])


def E(i: int, j: int, coeff=1) -> GlElement:
    return GlElement({GlIndex(i, j): coeff})


def gl_bracket(x: GlElement, y: GlElement) -> GlElement:
    """[E(i,j), E(n,m)] = delta(j,n) E(i,m) - delta(m,i) E(n,j), extended bilinearly"""
    acc: Dict[GlIndex, Scalar] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            weight = ca * cb
            if a.j == b.i:
                accumulate(acc, GlIndex(a.i, b.j), weight)
            if b.j == a.i:
                accumulate(acc, GlIndex(b.i, a.j), -weight)
    return GlElement._from_clean(acc)


def embed_phi(x: GlElement) -> LieElement:
    """Linear extension of E[i,j] -> Z[i,j] - Z[i+1,j+1]"""
    return x.map_terms(lambda u: Z(u.i, u.j) - Z(u.i + 1, u.j + 1), target=LieElement)


def trace(x: GlElement) -> Scalar:
    total = ZERO
    for u, c in x.items():
        if u.i == u.j:
            total = total + c
    return total


def is_sl(x: GlElement) -> bool:
    return not trace(x)


def chevalley_e(i: int) -> LieElement:
    """e_i = phi(E[i,i+1]) = Z[i,i+1] - Z[i+1,i+2]"""
    _check_node(i)
    return Z(i, i + 1) - Z(i + 1, i + 2)


def chevalley_f(i: int) -> LieElement:
    """f_i = phi(E[i+1,i]) = Z[i+1,i] - Z[i+2,i+1]"""
    _check_node(i)
    return Z(i + 1, i) - Z(i + 2, i + 1)


def coroot(i: int) -> LieElement:
    """Simple co-root phi(E[i,i] - E[i+1,i+1]) = Z[i,i] - 2 Z[i+1,i+1] + Z[i+2,i+2]"""
    _check_node(i)
    return Z(i, i) - Z(i + 1, i + 1, 2) + Z(i + 2, i + 2)


def _check_node(i: int) -> None:
    if i < 0:
        raise AlgebraError(f"Dynkin node index must be non-negative, got {i}")


def epsilon(i: int, h: GlElement) -> Scalar:
    """
    Weight epsilon_i on the diagonal Cartan subalgebra: epsilon_i(E[j,j]) = delta(i,j)

    Args:
        i: Weight index
        h: Diagonal element

    Returns:
        Coefficient of E[i,i] in h
    """
    off_diagonal = [u for u in h.support() if u.i != u.j]
    if off_diagonal:
        raise AlgebraError(f"epsilon_{i} is defined on diagonal matrices only, got {h}")
    return h.coefficient(GlIndex(i, i))


def cartan_pairing(i: int, j: int) -> int:
    """
    Eigenvalue a with [coroot(i), e_j] = a e_j, read off the bracket

    Raises ConsistencyError when the bracket is not a multiple of e_j.
    """
    image = bracket(coroot(i), chevalley_e(j))
    target = chevalley_e(j)
    if image.is_zero():
        return 0
    pivot = target.support()[0]
    ratio = image.coefficient(pivot) / target.coefficient(pivot)
    if image != target.scale(ratio) or not ratio.is_integer():
        raise ConsistencyError(f"[h_{i}, e_{j}] is not an integer multiple of e_{j}", image, target)
    return int(ratio.re)


def triangular_part(x: GlElement, part: TriangularPart) -> GlElement:
    """Projection onto n+ (j > i), h (diagonal) or n- (i > j)"""
    part = TriangularPart(part)
    if part is TriangularPart.N_PLUS:
        return x.filter(lambda u: u.j > u.i)
    if part is TriangularPart.H:
        return x.filter(lambda u: u.i == u.j)
    return x.filter(lambda u: u.i > u.j)


def root_of(i: int, j: int) -> Tuple[int, int]:
    """Root eps_i - eps_j carried by E[i,j], as the index pair (i, j)"""
    if i == j:
        raise AlgebraError("Diagonal units carry the zero weight, not a root")
    return (i, j)


def is_positive_root(i: int, j: int) -> bool:
    root_of(i, j)
    return i < j


def is_simple_root(i: int, j: int) -> bool:
    root_of(i, j)
    return j == i + 1


def sl_generators(bound: int) -> List[GlElement]:
    """Generating family E[i,j] (i != j) and E[i,i] - E[l,l] (i != l) with indices <= bound"""
    family = [E(i, j) for i in range(bound + 1) for j in range(bound + 1) if i != j]
    family += [E(i, i) - E(l, l) for i in range(bound + 1) for l in range(bound + 1) if i < l]
    return family


def embed_injective(bound: int) -> bool:
    """
    phi is injective on span{E[i,j] : i, j <= bound}

    Checked through exact rank of the truncated matrices of the images
    on t_0..t_{2*bound+2}.
    """
    units = [E(i, j) for i in range(bound + 1) for j in range(bound + 1)]
    images = [embed_phi(u) for u in units]
    independent = matrices_independent(images, 2 * bound + 2)
    logger.debug(f"phi injectivity on {len(units)} units up to {bound}: {independent}")
    return independent
