"""
Finitely supported linear combinations with exact coefficients

Every element type of the package (Lie elements, module vectors, Hopf
polynomials, Fock vectors, ...) is a map basis-key -> Scalar with no
zero coefficients stored. Subclasses fix the key type, the display
order and the JSON layout.
"""
import logging
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from scalars import Scalar, ZERO

logger = logging.getLogger(__name__)

TermSource = Union[Mapping[Any, Any], Iterable[Tuple[Any, Any]], None]


class Combination:
    """Immutable sparse linear combination of basis keys"""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: TermSource = None):
        clean: Dict[Any, Scalar] = {}
        if terms:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in pairs:
                self._check_key(key)
                coeff = Scalar.coerce(coeff)
                if key in clean:
                    clean[key] = clean[key] + coeff
                else:
                    clean[key] = coeff
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: Dict[Any, Scalar]):
        """Wrap a dict already free of zeros and validated keys"""
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def _check_key(self, key) -> None:
        """Subclasses validate basis keys here"""

    @staticmethod
    def sort_key(key):
        return key

    # -- access -----------------------------------------------------------

    def coefficient(self, key) -> Scalar:
        return self._terms.get(key, ZERO)

    def items(self) -> List[Tuple[Any, Scalar]]:
        """Terms in canonical display order"""
        return sorted(self._terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def support(self) -> List[Any]:
        return [k for k, _ in self.items()]

    def __iter__(self) -> Iterator[Tuple[Any, Scalar]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- vector space structure ---------------------------------------------

    def _same_kind(self, other) -> bool:
        return type(other) is type(self)

    def __add__(self, other):
        if not self._same_kind(other):
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            total = out.get(key, ZERO) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return self._from_clean(out)

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not self._same_kind(other):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> 'Combination':
        factor = Scalar.coerce(factor)
        if not factor:
            return self._from_clean({})
        return self._from_clean({k: c * factor for k, c in self._terms.items()})

    def __mul__(self, factor):
        if isinstance(factor, (Scalar, int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    def __rmul__(self, factor):
        if isinstance(factor, (Scalar, int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    def map_terms(self, image: Callable[[Any], 'Combination'], target: type = None) -> 'Combination':
        """
        Extend a basis map linearly

        Args:
            image: Function sending a basis key to a Combination
            target: Result type, used when the combination is empty

        Returns:
            Sum of coefficient * image(key)
        """
        target = target or type(self)
        acc: Dict[Any, Scalar] = {}
        for key, coeff in self._terms.items():
            for out_key, out_coeff in image(key)._terms.items():
                total = acc.get(out_key, ZERO) + coeff * out_coeff
                if total:
                    acc[out_key] = total
                else:
                    acc.pop(out_key, None)
        return target._from_clean(acc)

    def filter(self, keep: Callable[[Any], bool]) -> 'Combination':
        return self._from_clean({k: c for k, c in self._terms.items() if keep(k)})

    # -- equality -----------------------------------------------------------

    def __eq__(self, other):
        if not self._same_kind(other):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def accumulate(acc: Dict[Any, Scalar], key, coeff: Scalar) -> None:
    """Add coeff at key in a working dict, dropping cancelled entries"""
    total = acc.get(key, ZERO) + coeff
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)
