"""Checkers comparing computed invariants against the statements they are expected to satisfy.

Each checker returns a report instead of raising when a hypothesis is not met; only computation
failures raise.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from extscope.complexes.free_module import ModuleMap
from extscope.errors import UnsupportedError, UsageError
from extscope.ext.ext import compare_modules, diagonal_ext, ext
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.groebner.monomial import monomial_minimal_primes
from extscope.invariants.annihilators import gamma, hann
from extscope.invariants.depth import grade, projective_dimension
from extscope.invariants.dimension import dimension
from extscope.logger import LOGGER
from extscope.utils import sentinel

MIN_EASS_WINDOW = 4


@dataclass
class CheckReport:
    """Outcome of one checker.

    ``holds`` is None when the hypotheses are not met, so the conclusion was not tested.
    """

    name: str
    hypotheses: bool
    holds: Optional[bool]
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """A check passes unless its conclusion was tested and failed."""
        return self.holds is not False

    def to_json(self) -> dict:
        return {
            'check': self.name,
            'hypotheses': self.hypotheses,
            'holds': self.holds,
            **{key: sentinel(value) for key, value in self.details.items()},
        }


def _skipped(name: str, reason: str) -> CheckReport:
    return CheckReport(name, False, None, {'reason': reason})


def dim_formula_check(module: PresentedModule) -> CheckReport:
    """dim Ext^g(M, R) = dim M when dim Ext^(d-i)(M, R) <= i for all i and g = d - dim M.

    The report also carries the support comparison Supp Ext^g against Supp M, which may fail while the
    dimension formula holds, and both comparisons of dim Ext^g against dim M and against d - g.
    """

    name = 'dimension_formula'
    if module.is_zero():
        return _skipped(name, 'zero module')

    ring = module.ring
    d = ring.dimension
    g = grade(module)
    r = dimension(module)
    ext_dimensions = {i: dimension(ext(module, ring, i, up_to=d + 1)) for i in range(0, d + 1)}

    bounds = all(ext_dimensions[d - i] <= i for i in range(0, d + 1))
    hypotheses = bounds and g == d - r
    top = ext(module, ring, g).module
    conclusion = ext_dimensions[g] == r
    support_equal = top.annihilator().radical_equals(module.annihilator())

    return CheckReport(
        name, hypotheses, conclusion if hypotheses else None, {
            'grade': g,
            'dim': r,
            'ring_dim': d,
            'ext_dimensions': {str(i): v for i, v in ext_dimensions.items()},
            'dim_ext_grade': ext_dimensions[g],
            'bounds_hold': bounds,
            'grade_equals_codim': g == d - r,
            'dim_ext_grade_equals_dim': ext_dimensions[g] == r,
            'dim_ext_grade_equals_d_minus_g': ext_dimensions[g] == d - g,
            'support_equal': support_equal,
            'dimension_only': conclusion and not support_equal,
        }
    )


def ext_dimension_bound_check(module: PresentedModule) -> CheckReport:
    """dim Ext^i(M, R) <= d - i for every i over a polynomial ring."""

    name = 'ext_dimension_bound'
    ring = module.ring
    if not ring.is_polynomial_ring:
        return _skipped(name, 'needs a polynomial ring')

    d = ring.dimension
    dims = {i: dimension(ext(module, ring, i, up_to=d + 1)) for i in range(0, d + 1)}
    failures = [i for i, value in dims.items() if value > d - i]
    return CheckReport(name, True, not failures, {'ext_dimensions': {str(i): v for i, v in dims.items()},
                                                  'failures': failures})


def generator_count_check(ideal: Ideal) -> CheckReport:
    """For a height-two perfect ideal I of a polynomial ring: mu(Ext^2(S/I, S)) = mu(I) - 1 = beta_2(S/I), and the
    Betti numbers of S/I are (1, mu(I), mu(I) - 1)."""

    name = 'generator_count'
    ring = ideal.ring
    if not ring.is_polynomial_ring:
        return _skipped(name, 'needs a polynomial ring')

    module = PresentedModule.cyclic(ideal)
    pd = projective_dimension(module)
    g = grade(module)
    betti = module.betti(ring.ngens + 1)
    mu = ideal.mu()
    details = {'betti': betti, 'pd': pd, 'grade': g, 'mu': mu}
    if pd != 2 or g != 2:
        details['reason'] = 'hypotheses failed'
        return CheckReport(name, False, None, details)

    top = ext(module, ring, 2).mu()
    details.update({'mu_ext': top, 'hilbert_burch': betti == [1, mu, mu - 1]})
    holds = top == mu - 1 and top == betti[2] and details['hilbert_burch']
    return CheckReport(name, True, holds, details)


def betti_top_ext_check(module: PresentedModule) -> CheckReport:
    """mu(Ext^p(M, R)) = beta_p(M) for p = pd M < infinity."""

    name = 'betti_top_ext'
    if module.is_zero():
        return _skipped(name, 'zero module')

    p = projective_dimension(module)
    if p == math.inf:
        return _skipped(name, 'infinite projective dimension')

    betti = module.betti(p)
    top = ext(module, module.ring, p).mu()
    return CheckReport(name, True, top == betti[p], {'pd': p, 'betti': betti, 'mu_ext': top})


def hann_containment_check(module: PresentedModule) -> CheckReport:
    """Hann(M) ⊆ Ann(M), and Ann(M)^(pd - g + 1) ⊆ Hann(M) when pd M < infinity, over a polynomial ring."""

    name = 'hann_containment'
    ring = module.ring
    if not ring.is_polynomial_ring:
        return _skipped(name, 'needs a polynomial ring')
    if module.is_zero():
        return _skipped(name, 'zero module')

    product = hann(module)
    annihilator = module.annihilator()
    contained = annihilator.contains_ideal(product)
    p = projective_dimension(module)
    g = grade(module)
    details = {'hann': product.to_json(), 'ann': annihilator.to_json(), 'hann_in_ann': contained, 'pd': p,
               'grade': g}
    holds = contained
    if p != math.inf:
        exponent = int(p - g + 1)
        details['exponent'] = exponent
        details['power_in_hann'] = product.contains_ideal(annihilator.power(exponent))
        holds = holds and details['power_in_hann']
    return CheckReport(name, True, holds, details)


def gamma_grade_check(module: PresentedModule) -> CheckReport:
    """For pd M < infinity: gamma(M) has the radical of Ann M exactly when grade M > 0."""

    name = 'gamma_grade'
    if module.is_zero():
        return _skipped(name, 'zero module')
    if projective_dimension(module) == math.inf:
        return _skipped(name, 'infinite projective dimension')

    g = grade(module)
    ideal = gamma(module)
    equal = ideal.radical_equals(module.annihilator())
    return CheckReport(name, True, equal == (g > 0), {'grade': g, 'gamma': ideal.to_json(), 'radical_equal': equal})


def _normalized_columns(d: ModuleMap) -> Tuple:
    """Columns scaled so that their first nonzero entry is monic; equality of these is equality up to a
    diagonal change of basis."""

    columns = []
    for column in d.columns:
        pivot = next((entry for entry in column if entry), None)
        if pivot is None:
            columns.append(tuple(column))
            continue
        inverse = d.ring.field.one / pivot.leading_coefficient
        columns.append(tuple(entry.scale(inverse) for entry in column))
    return d.shape, tuple(columns)


def detect_periodicity(differentials: List[ModuleMap]) -> Optional[Tuple[int, int]]:
    """Smallest period P, then smallest start k, with d_j = d_(j+P) for every computed j >= k.

    ``differentials[0]`` is d_1. At least two full periods must be visible after k.
    """

    forms = [_normalized_columns(d) for d in differentials]
    length = len(forms)
    for period in range(1, length // 2 + 1):
        for start in range(1, length - 2 * period + 2):
            if all(forms[j - 1] == forms[j - 1 + period] for j in range(start, length - period + 1)):
                return period, start
    return None


@dataclass
class EassReport:
    """Ext^i(I, R) for i <= window: annihilators, accumulated minimal primes and the periodicity verdict."""

    window: int
    betti: List[int]
    annihilators: List[Ideal]
    min_union: List[Ideal]
    unsupported: List[int]
    periodicity: Optional[Tuple[int, int]]
    complete: bool
    support: Dict[int, bool] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if self.complete:
            return 'finite projective dimension'
        if self.periodicity is not None:
            return f"finiteness evidence: periodic from step {self.periodicity[1]}"
        return 'inconclusive'

    @property
    def support_holds(self) -> bool:
        return all(self.support.values())

    def to_json(self) -> dict:
        return {
            'window': self.window,
            'betti': self.betti,
            'annihilators': [ideal.to_json() for ideal in self.annihilators],
            'min_union': [prime.to_json() for prime in self.min_union],
            'unsupported': self.unsupported,
            'period': None if self.periodicity is None else self.periodicity[0],
            'periodic_from': None if self.periodicity is None else self.periodicity[1],
            'verdict': self.verdict,
            'support': {str(i): value for i, value in self.support.items()},
        }


def eass_experiment(ideal: Ideal, window: int = 8, support_ideal: Optional[Ideal] = None) -> EassReport:
    """Compute Ext^i(I, R) for 0 <= i <= window and look for eventual periodicity of the minimal resolution of I.

    With ``support_ideal`` every generator of it is tested for membership in rad Ann Ext^i(I, R), i >= 2.

    :raise UsageError: for a window below 4
    """

    if window < MIN_EASS_WINDOW:
        raise UsageError(f"eass experiment needs a window of at least {MIN_EASS_WINDOW}, got {window}")

    ring = ideal.ring
    module = PresentedModule.from_ideal(ideal)
    resolution = module.resolution(window + 1)
    annihilators = [ext(module, ring, i, up_to=window + 1).annihilator for i in range(0, window + 1)]

    union: Dict[Tuple[str, ...], Ideal] = {}
    unsupported = []
    for i, annihilator in enumerate(annihilators):
        try:
            for prime in monomial_minimal_primes(annihilator):
                union.setdefault(tuple(str(g) for g in prime.generators), prime)
        except UnsupportedError:
            unsupported.append(i)
    if unsupported:
        LOGGER.fields({'indices': unsupported}).warning('minimal primes unavailable for non-monomial annihilators')

    support = {}
    if support_ideal is not None:
        for i in range(2, window + 1):
            support[i] = all(annihilators[i].radical_contains(g) for g in support_ideal.generators)

    differentials = [resolution.differential(k) for k in range(1, resolution.complex.hi + 1)]
    periodicity = None if resolution.is_complete else detect_periodicity(differentials)
    if not resolution.is_complete:
        LOGGER.fields({'ideal': str(ideal), 'window': window}).warning('resolution truncated at the window')

    return EassReport(
        window,
        resolution.betti(),
        annihilators,
        sorted(union.values(), key=lambda p: (len(p.generators), str(p))),
        unsupported,
        periodicity,
        resolution.is_complete,
        support,
    )


def ext_duality_check(module: PresentedModule) -> CheckReport:
    """M and Ext^g(Ext^g(M, R), R) agree on invariants for a perfect module M of grade g over a polynomial ring."""

    name = 'ext_duality'
    ring = module.ring
    if not ring.is_polynomial_ring:
        return _skipped(name, 'needs a polynomial ring')
    if module.is_zero():
        return _skipped(name, 'zero module')

    g = grade(module)
    pd = projective_dimension(module)
    if pd != g:
        return CheckReport(name, False, None, {'reason': 'not perfect', 'grade': g, 'pd': pd})

    chain = diagonal_ext(module, g, 2)
    report = compare_modules(chain[0], chain[2])
    return CheckReport(name, True, report.equal, {'grade': g, **report.to_json()})
