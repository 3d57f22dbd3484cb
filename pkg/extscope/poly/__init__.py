"""Polynomial layer: coefficient fields, monomial orders, rings, polynomials and their text form."""

from .field import CoefficientField
from .order import Monomial, MonomialOrder, weighted_degree
from .polynomial import ANY_DEGREE, Polynomial, divide_with_remainder, homogeneity_check
from .ring import RingSpec, combinatorial_dimension
from .parser import format_polynomial, parse_generator_list, parse_generators, parse_polynomial, parse_ring
