"""
Expression Parser - text grammar for ladder algebra elements and module vectors

    expr  := [sign] term (('+'|'-') term)*
    term  := [coeff '*'] atom
    atom  := 'Z[' nat ',' nat ']' | 'E[' nat ',' nat ']' | 'e[' nat ']'
           | 'f[' nat ']' | 'h[' nat ']' | 'phi(' expr ')'
           | '[' expr ',' expr ']' | '(' expr ')' | '0'
    coeff := nat ['/' nat] ['i'] | 'i'

Vectors of the standard module use the same coefficients over atoms t[k].
"""
import json
import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import pyparsing as pp

from classical_embed import GlElement, E, chevalley_e, chevalley_f, coroot, embed_phi, gl_bracket
from errors import AlgebraError, ParseError
from lie_core import LieElement, Z, bracket
from modules_rep import SVector, t
from scalars import Scalar
from utils import truncate_string

logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()

Element = Union[LieElement, GlElement]


# -- syntax tree ---------------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    """Generator atom: kind is one of Z, E, e, f, h"""
    kind: str
    indices: Tuple[int, ...]


@dataclass(frozen=True)
class ZeroNode:
    pass


@dataclass(frozen=True)
class Scale:
    coeff: Scalar
    body: 'Expr'


@dataclass(frozen=True)
class Sum:
    terms: Tuple['Expr', ...]


@dataclass(frozen=True)
class Bracket:
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Phi:
    body: 'Expr'


Expr = Union[Gen, ZeroNode, Scale, Sum, Bracket, Phi]

MINUS_ONE = Scalar(-1)


# -- grammar -------------------------------------------------------------------

def _to_index(s, loc, toks):
    value = int(toks[0])
    if value < 0:
        raise pp.ParseFatalException(s, loc, f"Negative index {value}")
    return value


def _to_scalar(s, loc, toks):
    try:
        return Scalar.parse(toks[0])
    except ParseError as e:
        raise pp.ParseFatalException(s, loc, str(e))


def _signed_sum(toks):
    """Fold [sign] term (op term)* into a Sum node"""
    items = list(toks)
    terms = []
    sign = '+'
    if items and items[0] in ('+', '-'):
        sign = items.pop(0)
    for item in items:
        if item in ('+', '-'):
            sign = item
            continue
        terms.append(Scale(MINUS_ONE, item) if sign == '-' else item)
        sign = '+'
    return terms[0] if len(terms) == 1 else Sum(tuple(terms))


def _build_grammar():
    LBRACK, RBRACK, COMMA, LPAR, RPAR, STAR = map(pp.Suppress, '[],()*')
    index = pp.Regex(r'-?\d+').set_name('index').set_parse_action(_to_index)
    coeff = pp.Regex(r'\d+(?:/\d+)?i?|i(?![\w\[])').set_name('coefficient').set_parse_action(_to_scalar)
    sign = pp.one_of('+ -')

    expr = pp.Forward().set_name('expression')

    pair_gen = (pp.one_of('Z E') + LBRACK - index + COMMA + index + RBRACK).set_parse_action(
        lambda toks: Gen(toks[0], (toks[1], toks[2])))
    single_gen = (pp.one_of('e f h') + LBRACK - index + RBRACK).set_parse_action(
        lambda toks: Gen(toks[0], (toks[1],)))
    phi = (pp.Keyword('phi') + LPAR - expr + RPAR).set_parse_action(lambda toks: Phi(toks[1]))
    bracket_node = (LBRACK + expr + COMMA - expr + RBRACK).set_parse_action(
        lambda toks: Bracket(toks[0], toks[1]))
    group = LPAR - expr + RPAR
    zero = pp.Regex(r'0(?![\d/i*])').set_parse_action(lambda: ZeroNode())

    atom = phi | pair_gen | single_gen | bracket_node | group | zero
    term = (coeff + STAR - atom).set_parse_action(lambda toks: Scale(toks[0], toks[1])) | atom
    expr <<= (pp.Optional(sign) + term + pp.ZeroOrMore(sign - term)).set_parse_action(_signed_sum)

    vector_atom = (pp.Suppress('t') + LBRACK - index + RBRACK).set_parse_action(lambda toks: t(toks[0]))
    vector_term = ((coeff + STAR - vector_atom).set_parse_action(lambda toks: toks[1].scale(toks[0]))
                   | vector_atom
                   | zero.copy().set_parse_action(lambda: SVector()))
    vector = (pp.Optional(sign) + vector_term + pp.ZeroOrMore(sign - vector_term)).set_parse_action(_vector_sum)
    return expr, vector


def _vector_sum(toks):
    items = list(toks)
    total = SVector()
    sign = '+'
    if items and isinstance(items[0], str):
        sign = items.pop(0)
    for item in items:
        if isinstance(item, str):
            sign = item
            continue
        total = total - item if sign == '-' else total + item
        sign = '+'
    return total


_EXPR, _VECTOR = _build_grammar()


def _run(grammar: pp.ParserElement, text: str):
    try:
        return grammar.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        logger.warning(f"Rejected input at offset {e.loc}: {truncate_string(text, 80)}")
        raise ParseError(e.msg, e.loc, text) from None


def parse(text: str) -> Expr:
    """
    Parse an algebra expression into a syntax tree

    Args:
        text: Expression such as '2*Z[1,1] - 1/3*Z[0,2]'

    Returns:
        Expr tree

    Raises:
        ParseError: with the character offset of the first problem
    """
    return _run(_EXPR, text)


def parse_vector(text: str) -> SVector:
    """Parse a module vector such as 't[0] - 2*t[3]'"""
    return _run(_VECTOR, text)


# -- evaluation ----------------------------------------------------------------

def _combine(left: Optional[Element], right: Optional[Element]) -> Optional[Element]:
    """None stands for a zero literal that has not met a universe yet"""
    if left is None:
        return right
    if right is None:
        return left
    _check_universe(left, right)
    return left + right


def _check_universe(left: Element, right: Element) -> None:
    if type(left) is not type(right):
        raise AlgebraError(
            "Cannot mix Z-atoms and E-atoms in one expression; wrap the gl terms in phi(...) to embed them")


def _eval(node: Expr) -> Optional[Element]:
    if isinstance(node, Gen):
        if node.kind == 'Z':
            return Z(*node.indices)
        if node.kind == 'E':
            return E(*node.indices)
        builder = {'e': chevalley_e, 'f': chevalley_f, 'h': coroot}[node.kind]
        return builder(node.indices[0])
    if isinstance(node, ZeroNode):
        return None
    if isinstance(node, Scale):
        body = _eval(node.body)
        return None if body is None else body.scale(node.coeff)
    if isinstance(node, Sum):
        total = None
        for term in node.terms:
            total = _combine(total, _eval(term))
        return total
    if isinstance(node, Bracket):
        left, right = _eval(node.left), _eval(node.right)
        if left is None or right is None:
            return _zero_like(left, right)
        _check_universe(left, right)
        return gl_bracket(left, right) if isinstance(left, GlElement) else bracket(left, right)
    if isinstance(node, Phi):
        body = _eval(node.body)
        if body is None:
            return LieElement()
        if not isinstance(body, GlElement):
            raise AlgebraError("phi(...) embeds gl elements; its argument must be built from E-atoms")
        return embed_phi(body)
    raise AlgebraError(f"Unknown expression node {node!r}")


def _zero_like(left: Optional[Element], right: Optional[Element]) -> Optional[Element]:
    """Bracket with a zero literal: zero in whichever universe is known"""
    known = left if left is not None else right
    return None if known is None else known.scale(0)


def evaluate(node: Expr) -> Element:
    """
    Evaluate a syntax tree to a canonical element

    Returns a GlElement when only E-atoms appear outside phi(...), else a
    LieElement. A bare zero evaluates to the zero LieElement.
    """
    value = _eval(node)
    return LieElement() if value is None else value


def eval_text(text: str) -> Element:
    return evaluate(parse(text))


def format_element(x, fmt: str = 'text') -> str:
    """Render any element type as text (re-parseable for Lie, gl and vectors) or JSON"""
    if fmt == 'json':
        return json.dumps(x.to_json(), indent=2)
    if fmt == 'text':
        return str(x)
    raise AlgebraError(f"Unknown format '{fmt}', expected text or json")


def round_trips(text: str) -> bool:
    """format(eval(parse(s))) re-parses to the same element"""
    value = eval_text(text)
    reparsed = eval_text(format_element(value))
    return reparsed == value or (not value and not reparsed)
