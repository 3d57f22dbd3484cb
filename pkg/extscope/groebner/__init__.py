"""Groebner layer: the Buchberger engine, ideals, submodules of free modules and their operations."""

from .buchberger import Buchberger, Element
from .ideal import Ideal
from .submodule import GroebnerBasis, SubmoduleOfFree, column_degree
from .operations import (groebner_basis, ideal_ops, ideal_quotient, intersect_all, minimal_generators,
                         module_quotient, normal_form, radical_ideal_equal, radical_membership, syzygies)
from .monomial import monomial_associated_primes, monomial_minimal_primes
