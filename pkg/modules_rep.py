"""
Standard Module - the graded representation S = span{t_k} of the ladder Lie algebra
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import numpy as np
import pandas as pd
import sympy

from combination import Combination, accumulate
from errors import AlgebraError
from lie_core import GenIndex, LieElement, Part, Z, format_terms, project
from scalars import Scalar, ZERO, ONE

logger = logging.getLogger(__name__)


class SVector(Combination):
    """Vector of the standard module: a finite sum of c * t_k"""

    __slots__ = ()

    def _check_key(self, key) -> None:
        if not isinstance(key, int) or key < 0:
            raise AlgebraError(f"Module basis index must be a non-negative int, got {key!r}")

    def __str__(self):
        return format_terms(self.items(), lambda k: f"t[{k}]")

    def max_degree(self) -> int:
        if self.is_zero():
            raise AlgebraError("The zero vector has no degree")
        return max(self.support())

    def to_json(self) -> Dict[str, Any]:
        return {'terms': [{'k': k, 'coeff': str(c)} for k, c in self.items()]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'SVector':
        return cls((int(t['k']), Scalar.parse(t['coeff'])) for t in data['terms'])


def t(k: int, coeff=ONE) -> SVector:
    return SVector({k: coeff})


def act(x: LieElement, v: SVector) -> SVector:
    """
    Action of the Lie algebra on S

    Z[n,m] t_k = t_{k-m+n} when m <= k, and 0 otherwise; extended
    bilinearly.
    """
    acc: Dict[int, Scalar] = {}
    for g, c in x.items():
        for k, d in v.items():
            if g.m <= k:
                accumulate(acc, k - g.m + g.n, c * d)
    return SVector._from_clean(acc)


def star(u: SVector, v: SVector) -> SVector:
    """Bilinear extension of t_n * t_m = t_{n+m}"""
    acc: Dict[int, Scalar] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            accumulate(acc, a + b, ca * cb)
    return SVector._from_clean(acc)


@dataclass(frozen=True)
class TruncatedMatrix:
    """
    Matrix of a Lie element on span{t_0..t_N}

    Row r holds the coefficient of t_r, column c the source vector t_c.
    """
    size: int
    entries: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.size or any(len(row) != self.size for row in self.entries):
            raise AlgebraError(f"Matrix entries do not form a {self.size}x{self.size} square")

    def entry(self, row: int, col: int) -> Scalar:
        return self.entries[row][col]

    def nonzero_positions(self) -> List[Tuple[int, int]]:
        return [(r, c) for r in range(self.size) for c in range(self.size) if self.entries[r][c]]

    def as_numpy(self) -> np.ndarray:
        """
        Exact numpy view: int64 when every entry is an integer, else object array of Scalar
        """
        flat = [e for row in self.entries for e in row]
        if all(e.is_integer() for e in flat):
            return np.array([[int(e.re) for e in row] for row in self.entries], dtype=np.int64)
        return np.array(self.entries, dtype=object)

    @classmethod
    def from_numpy(cls, array: np.ndarray) -> 'TruncatedMatrix':
        rows = tuple(tuple(Scalar.coerce(int(e)) if isinstance(e, (int, np.integer)) else Scalar.coerce(e)
                           for e in row) for row in array)
        return cls(len(rows), rows)

    def commutator(self, other: 'TruncatedMatrix') -> 'TruncatedMatrix':
        a, b = self.as_numpy(), other.as_numpy()
        return TruncatedMatrix.from_numpy(a @ b - b @ a)

    def block(self, size: int) -> 'TruncatedMatrix':
        """Top-left size x size block"""
        return TruncatedMatrix(size, tuple(row[:size] for row in self.entries[:size]))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([[str(e) for e in row] for row in self.entries])

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, header=False)

    def to_text(self) -> str:
        frame = self.to_frame()
        frame.index = [f"t[{r}]" for r in range(self.size)]
        frame.columns = [f"t[{c}]" for c in range(self.size)]
        return frame.to_string()

    def to_json(self) -> Dict[str, Any]:
        return {'size': self.size, 'rows': [[str(e) for e in row] for row in self.entries]}


def matrix(x: LieElement, N: int) -> TruncatedMatrix:
    """
    Truncated matrix of x on t_0..t_N

    Args:
        x: Lie element
        N: Largest basis index kept (N >= 1)

    Returns:
        (N+1) x (N+1) TruncatedMatrix
    """
    if N < 1:
        raise AlgebraError(f"Truncation size must be at least 1, got {N}")
    rows = [[ZERO] * (N + 1) for _ in range(N + 1)]
    for col in range(N + 1):
        for r, coeff in act(x, t(col)).items():
            if r <= N:
                rows[r][col] = coeff
    return TruncatedMatrix(N + 1, tuple(tuple(row) for row in rows))


def generator_matrix_closed_form(g: GenIndex, N: int) -> List[Tuple[int, int]]:
    """Positions of the ones of Z[n,m]: (c - m + n, c) for m <= c, inside the truncation"""
    return [(c - g.m + g.n, c) for c in range(g.m, N + 1) if c - g.m + g.n <= N]


def matrices_independent(elements: List[LieElement], N: int) -> bool:
    """Exact linear independence of the truncated matrices of the given elements"""
    if not elements:
        return True
    rows = []
    for x in elements:
        mat = matrix(x, N)
        rows.append([e.to_sympy() for row in mat.entries for e in row])
    return sympy.Matrix(rows).rank() == len(elements)


def is_singular(v: SVector) -> bool:
    """
    True iff every generator of negative degree annihilates v

    Only Z[n,m] with m <= max degree of v can act non-trivially, so the
    check is finite.
    """
    if v.is_zero():
        raise AlgebraError("Singularity is undefined for the zero vector")
    top = v.max_degree()
    for m in range(1, top + 1):
        for n in range(m):
            if act(Z(n, m), v):
                return False
    return True


def highest_weight_violations(bound: int) -> List[str]:
    """
    Check t_0 is a highest weight vector up to degree bound

    Z[0,j] t_0 must vanish for 1 <= j <= bound, and since every graded
    piece is spanned by one t_d, the singular vectors of degree <= bound
    must be exactly the multiples of t_0.

    Returns:
        Descriptions of the violations found (empty when none)
    """
    problems = []
    for j in range(1, bound + 1):
        image = act(Z(0, j), t(0))
        if image:
            problems.append(f"Z[0,{j}] t[0] = {image}")
    for d in range(1, bound + 1):
        if is_singular(t(d)):
            problems.append(f"t[{d}] is singular")
    if not is_singular(t(0)):
        problems.append("t[0] is not singular")
    return problems


def hw_generate(k: int) -> SVector:
    """Z[k,0] t_0 = t_k: the positive part applied to t_0 reaches every degree"""
    return act(Z(k, 0), t(0))


def highest_weight(h: LieElement) -> Scalar:
    """
    Weight of t_0 under an element of L0

    Args:
        h: Element of degree zero

    Returns:
        The scalar a with h t_0 = a t_0
    """
    if project(h, Part.ZERO) != h:
        raise AlgebraError(f"Highest weight is defined on L0 only, got {h}")
    return act(h, t(0)).coefficient(0)


def shift_image(g: GenIndex, k: int) -> SVector:
    """Z[n,0] shifts t_k up by n; Z[0,n] shifts down by n or kills t_k when k < n"""
    if g.m != 0 and g.n != 0:
        raise AlgebraError(f"{g} is neither a shift nor a quasi-shift")
    return act(LieElement({g: 1}), t(k))
