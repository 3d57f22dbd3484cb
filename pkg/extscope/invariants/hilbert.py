"""Hilbert series of graded modules, read from lead-term modules or from free resolutions."""

from collections import Counter
from typing import TYPE_CHECKING, Dict, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from extscope.errors import ParseError, TruncationError, UsageError
from extscope.groebner.monomial import exponent_matrix, hilbert_numerator

if TYPE_CHECKING:
    from extscope.complexes.resolution import Resolution
    from extscope.ext.presented import PresentedModule

T = sympy.Symbol('t')


def _strip_root(poly: sympy.Poly) -> Tuple[sympy.Poly, int]:
    """Divide out (t - 1) as often as possible; returns the quotient and the multiplicity."""

    factor = sympy.Poly(T - 1, T)
    multiplicity = 0
    while True:
        quotient, remainder = poly.div(factor)
        if not remainder.is_zero:
            return poly, multiplicity
        poly = quotient
        multiplicity += 1


class HilbertSeries:
    """HS(M)(t) = N(t) / prod(1 - t^w) over the variable weights w.

    :param numerator: ``{exponent: coefficient}``; exponents may be negative for twisted modules
    :param weights: Variable weights of the ring
    """

    def __init__(self, numerator: Dict[int, int], weights: Sequence[int]):
        self.__numerator = {int(k): int(v) for k, v in numerator.items() if v}
        self.__weights = tuple(weights)

    @property
    def numerator(self) -> Dict[int, int]:
        return dict(self.__numerator)

    @property
    def weights(self) -> Tuple[int, ...]:
        return self.__weights

    def is_zero(self) -> bool:
        return not self.__numerator

    def normalized(self) -> 'HilbertSeries':
        """The same series shifted so that the lowest numerator exponent is 0."""

        if not self.__numerator:
            return self
        low = min(self.__numerator)
        return HilbertSeries({k - low: v for k, v in self.__numerator.items()}, self.__weights)

    def numerator_expr(self) -> sympy.Expr:
        return sympy.Add(*(c * T**k for k, c in self.__numerator.items()))

    def denominator_expr(self) -> sympy.Expr:
        return sympy.Mul(*(1 - T**w for w in self.__weights))

    def rational(self) -> sympy.Expr:
        """The series as a reduced rational function in t."""
        return sympy.cancel(self.numerator_expr() / self.denominator_expr())

    def _shifted(self) -> Tuple[sympy.Poly, int]:
        low = min(self.__numerator)
        return sympy.Poly(sympy.Add(*(c * T**(k - low) for k, c in self.__numerator.items())), T), low

    def dimension(self) -> int:
        """Order of the pole at t = 1: the number of variables minus the multiplicity of 1 as a root of N.

        -1 for the zero series.
        """

        if not self.__numerator:
            return -1
        poly, _ = self._shifted()
        return len(self.__weights) - _strip_root(poly)[1]

    def reduced(self) -> Tuple[Dict[int, int], int]:
        """Numerator Q and pole order k with HS = Q / (1 - t)^k; standard grading only."""

        if any(w != 1 for w in self.__weights):
            raise UsageError("reduced form needs a standard grading")
        if not self.__numerator:
            return {}, 0

        poly, low = self._shifted()
        quotient, multiplicity = _strip_root(poly)
        sign = (-1)**multiplicity
        numerator = {monom[0] + low: sign * int(c) for monom, c in quotient.terms()}
        return numerator, len(self.__weights) - multiplicity

    def matches(self, text: str) -> bool:
        """Whether this series equals the rational function ``text`` in t (``^`` allowed for powers)."""

        try:
            expected = parse_expr(text.replace('^', '**'), local_dict={'t': T},
                                  transformations=standard_transformations + (convert_xor,))
        except (SyntaxError, TypeError, sympy.SympifyError) as error:
            raise ParseError(f"cannot read Hilbert series {text!r}: {error}") from error
        return sympy.cancel(expected - self.rational()) == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.__numerator == other.numerator and self.__weights == other.weights

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.__numerator.items())), self.__weights))

    def __add__(self, other: 'HilbertSeries') -> 'HilbertSeries':
        if self.__weights != other.weights:
            raise UsageError("Hilbert series of different gradings")
        total = Counter(self.__numerator)
        total.update(other.numerator)
        return HilbertSeries(total, self.__weights)

    def shift(self, degree: int) -> 'HilbertSeries':
        """Series of M(-degree)."""
        return HilbertSeries({k + degree: v for k, v in self.__numerator.items()}, self.__weights)

    def __str__(self) -> str:
        return str(self.rational())

    def to_json(self) -> dict:
        return {
            'numerator': {str(k): v for k, v in sorted(self.__numerator.items())},
            'weights': list(self.__weights),
            'rational': str(self.rational()),
        }


def hilbert_series(module: 'PresentedModule') -> HilbertSeries:
    """HS(M) = sum_i t^(a_i) HS(S/L_i), L_i the lead monomials of component i of the relations of M lifted to S.

    The lift includes J F_0, so over R = S/J this is the series of M as an S-module, which is the same.
    """

    ring = module.ring
    twists = module.generators.twists
    if not twists:
        return HilbertSeries({}, ring.weights)

    leads = module.relations().groebner().leading_monomials()
    total: Counter = Counter()
    for twist, monomials in zip(twists, leads):
        numerator = hilbert_numerator(exponent_matrix(monomials, ring.ngens), ring.weights)
        for exponent, coefficient in numerator.items():
            total[exponent + twist] += coefficient
    return HilbertSeries(total, ring.weights)


def hilbert_series_from_resolution(resolution: 'Resolution') -> HilbertSeries:
    """Alternating sum of the twisted free modules of a complete resolution over a polynomial ring.

    :raise UsageError: over a quotient ring
    :raise TruncationError: for a truncated resolution
    """

    ring = resolution.module.ring
    if not ring.is_polynomial_ring:
        raise UsageError("resolution Hilbert series needs a polynomial ring")
    if not resolution.is_complete:
        raise TruncationError("Hilbert series needs a complete resolution", resolution.truncated_at + 1)

    total: Counter = Counter()
    for k, twists in enumerate(resolution.graded_betti()):
        for twist in twists:
            total[twist] += (-1)**k
    return HilbertSeries(total, ring.weights)
