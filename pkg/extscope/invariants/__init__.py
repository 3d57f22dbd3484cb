"""Invariants layer: numerical and ideal-theoretic invariants of modules and the checks built on them."""

from .hilbert import HilbertSeries, hilbert_series, hilbert_series_from_resolution
from .window import homological_window
from .dimension import ZERO_MODULE_DIMENSION, dimension, ideal_dimension
from .depth import (depth, grade, grade_by_ext, grade_by_koszul, is_cohen_macaulay, koszul_grade, koszul_homology,
                    projective_dimension)
from .annihilators import Gamma, ext_annihilators, gamma, hann
from .support import (NonvanishingCheck, SupportCheck, SupportDescriptor, homological_support_check,
                      nonvanishing_check, nonvanishing_indices, quasi_perfect_support_check)
from .primes import (AssOracle, PrimeRecord, ass_containment, ass_oracle, cyclic_monomial_associated_primes,
                     hidden_primes)
from .checks import (CheckReport, EassReport, betti_top_ext_check, detect_periodicity, dim_formula_check,
                     eass_experiment, ext_dimension_bound_check, ext_duality_check, gamma_grade_check,
                     generator_count_check, hann_containment_check)
from .report import InvariantReport, compute_invariants
from .corpus import corpus_ring, height_two_perfect_corpus, monomial_corpus
from .suites import (SUITES, SuiteResult, bridger_stability_suite, diagonal_stabilization_suite, ext_duality_suite,
                     run_suite)
