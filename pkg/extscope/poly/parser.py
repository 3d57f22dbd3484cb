"""Text form of polynomials and rings.

Polynomials are read with the sympy expression parser, so ``3x^2y - 1/2 z^3``, ``3*x**2*y`` and
``(X+Y+Z)^5`` are all accepted. Variables match case-insensitively when unambiguous, since rings are often
written with capitals for the variables of S and lowercase for their residues in R.
"""

import re
from tokenize import TokenError
from typing import Dict, List, Sequence, Tuple

from sympy import Poly, Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication, parse_expr, split_symbols,
                                        standard_transformations)
from sympy.polys.polyerrors import PolynomialError

from extscope.errors import ParseError, UsageError
from extscope.poly.field import CoefficientField
from extscope.poly.polynomial import Polynomial
from extscope.poly.ring import RingSpec

TRANSFORMATIONS = standard_transformations + (split_symbols, implicit_multiplication, convert_xor)

_RING = re.compile(r"^\s*(?P<field>[^\[\]]+?)\s*\[(?P<variables>[^\]]*)\]\s*(?:/\s*(?P<quotient>.+?))?\s*$")


def _symbol_table(ring: RingSpec) -> Tuple[List[Symbol], Dict[str, Symbol]]:
    symbols = [Symbol(f"_v{i}") for i in range(ring.ngens)]
    table: Dict[str, Symbol] = {}
    folded: Dict[str, List[Symbol]] = {}

    for name, symbol in zip(ring.variables, symbols):
        table[name] = symbol
        folded.setdefault(name.lower(), []).append(symbol)

    for lower, candidates in folded.items():
        if len(candidates) == 1:
            table.setdefault(lower, candidates[0])
            table.setdefault(lower.upper(), candidates[0])

    return symbols, table


def parse_polynomial(ring: RingSpec, text: str) -> Polynomial:
    """Parse ``text`` into a polynomial of the ambient ring of ``ring``.

    :raise ParseError: for malformed text, unknown names or non-polynomial expressions
    """

    if not isinstance(text, str) or not text.strip():
        raise ParseError(f"empty polynomial text {text!r}")

    symbols, table = _symbol_table(ring)

    try:
        expression = parse_expr(text, local_dict=dict(table), transformations=TRANSFORMATIONS)
    except (SympifyError, SyntaxError, TypeError, ValueError, TokenError) as error:
        raise ParseError(f"cannot parse {text!r}: {error}") from error

    # split_symbols builds plain Symbols for the pieces of juxtaposed names such as "XY"
    unknown = [s for s in getattr(expression, 'free_symbols', set()) if s not in symbols]
    substitutions = {}
    for symbol in unknown:
        target = table.get(symbol.name)
        if target is None:
            raise ParseError(f"unknown name {symbol.name!r} in {text!r}; variables are {', '.join(ring.variables)}")
        substitutions[symbol] = target
    if substitutions:
        expression = expression.xreplace(substitutions)

    try:
        poly = Poly(expression, *symbols, domain='QQ')
    except (PolynomialError, SympifyError, TypeError, ValueError) as error:
        raise ParseError(f"{text!r} is not a polynomial over {ring.field}: {error}") from error

    field = ring.field
    terms = {}
    try:
        for monomial, coefficient in poly.terms():
            rational = poly.domain.to_sympy(coefficient)
            terms[monomial] = field.from_rational(int(rational.p), int(rational.q))
    except UsageError as error:
        raise ParseError(f"cannot read {text!r} over {field}: {error}") from error

    return Polynomial(ring, terms)


def format_polynomial(polynomial: Polynomial) -> str:
    """Canonical text: terms in decreasing monomial order, ``3*x^2*y - 1/2*z^3``; ``0`` for zero."""

    ring = polynomial.ring
    field = ring.field
    parts = []

    for index, (monomial, coefficient) in enumerate(polynomial.terms()):
        value = field.to_sympy(coefficient)
        negative = value < 0
        magnitude = -value if negative else value
        powers = '*'.join(
            name if e == 1 else f"{name}^{e}" for name, e in zip(ring.variables, monomial) if e
        )

        if powers:
            term = powers if magnitude == 1 else f"{magnitude}*{powers}"
        else:
            term = str(magnitude)

        if index == 0:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f" - {term}" if negative else f" + {term}")

    return ''.join(parts) if parts else '0'


def split_top_level(text: str, separator: str = ',') -> List[str]:
    """Split on separators outside parentheses and brackets."""

    pieces, depth, current = [], 0, []
    for char in text:
        if char in '([':
            depth += 1
        elif char in ')]':
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if char == separator and depth == 0:
            pieces.append(''.join(current).strip())
            current = []
        else:
            current.append(char)
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    pieces.append(''.join(current).strip())
    return [piece for piece in pieces if piece]


def _wrapped(text: str) -> bool:
    """Whether the opening parenthesis of ``text`` closes at its last character."""

    if not (text.startswith('(') and text.endswith(')')):
        return False
    depth = 0
    for index, char in enumerate(text):
        depth += char == '('
        depth -= char == ')'
        if depth == 0:
            return index == len(text) - 1
    return False


def parse_generators(ring: RingSpec, text: str) -> List[Polynomial]:
    """Read ``(g1, g2, ...)``, ``g1, g2`` or a single expression such as ``(X+Y+Z)^5``."""

    text = text.strip()
    if _wrapped(text):
        text = text[1:-1]
    return [parse_polynomial(ring, piece) for piece in split_top_level(text)]


def parse_ring(text: str, degree_cap: int = None) -> RingSpec:
    """Parse ``QQ[x,y,z]``, ``F5[X,Y,Z]/(X+Y+Z)^5`` or ``QQ[x:1,y:2]``.

    Variable names are lowercased; the quotient may use either case.
    """

    match = _RING.match(text or '')
    if match is None:
        raise ParseError(f"cannot parse ring {text!r}")

    field = CoefficientField.from_tag(match.group('field'))
    names: List[str] = []
    weights: List[int] = []
    for piece in split_top_level(match.group('variables')):
        name, _, weight = piece.partition(':')
        names.append(name.strip().lower())
        try:
            weights.append(int(weight) if weight.strip() else 1)
        except ValueError as error:
            raise ParseError(f"invalid weight in {piece!r}") from error

    try:
        ring = RingSpec(tuple(names), field, tuple(weights), degree_cap=degree_cap)
    except UsageError as error:
        raise ParseError(f"invalid ring {text!r}: {error}") from error

    quotient = match.group('quotient')
    if quotient:
        ring = ring.quotient(parse_generators(ring, quotient))

    return ring


def parse_generator_list(ring: RingSpec, generators: Sequence[str]) -> List[Polynomial]:
    """Parse each text and reduce it into ``ring``."""
    return [ring.reduce(parse_polynomial(ring, text)) for text in generators]
