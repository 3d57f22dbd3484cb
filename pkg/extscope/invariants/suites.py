"""Property suites run over seeded corpora of monomial ideals."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from extscope.errors import ExtscopeError
from extscope.ext.ext import bridger_stability_check, diagonal_stabilization_check, ext_shift_check
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.invariants.annihilators import gamma
from extscope.invariants.checks import (CheckReport, betti_top_ext_check, dim_formula_check, ext_dimension_bound_check,
                                        ext_duality_check, gamma_grade_check, generator_count_check,
                                        hann_containment_check)
from extscope.invariants.depth import depth, grade
from extscope.invariants.dimension import dimension
from extscope.invariants.primes import ass_containment
from extscope.invariants.support import homological_support_check
from extscope.logger import LOGGER
from extscope.utils import get_error_info

Outcome = Optional[bool]


@dataclass
class SuiteResult:
    """Counts of one property suite. ``skipped`` instances did not meet the hypotheses."""

    name: str
    checked: int = 0
    skipped: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            'suite': self.name,
            'passed': self.passed,
            'checked': self.checked,
            'skipped': self.skipped,
            'failures': self.failures,
        }


def _outcome(value: Any) -> Outcome:
    if isinstance(value, CheckReport):
        return value.holds
    return value


def run_suite(name: str, items: Sequence[Any], check: Callable[[Any], Any], parallel: bool = False) -> SuiteResult:
    """Apply ``check`` to every item; False is a failure, None a skip, and an engine error a failure."""

    def evaluate(item: Any) -> Dict[str, Any]:
        try:
            return {'item': str(item), 'outcome': _outcome(check(item))}
        except ExtscopeError as error:
            return {'item': str(item), 'outcome': False, **get_error_info(error)}

    if parallel:
        with ThreadPoolExecutor() as pool:
            outcomes = list(pool.map(evaluate, items))
    else:
        outcomes = [evaluate(item) for item in items]

    result = SuiteResult(name)
    for outcome in outcomes:
        if outcome['outcome'] is None:
            result.skipped += 1
            continue
        result.checked += 1
        if outcome['outcome'] is False:
            outcome.pop('trace', None)
            result.failures.append(outcome)

    LOGGER.fields(result.to_json()).info('suite finished')
    return result


def _cyclic(ideal: Ideal) -> PresentedModule:
    return PresentedModule.cyclic(ideal)


@dataclass
class _Pair:
    left: Ideal
    right: Ideal

    def __str__(self) -> str:
        return f"({self.left}, {self.right})"


def support_identity_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """Supp(M ⊗ N) = union of Supp Ext^i(M, N), i <= dim N, for consecutive corpus pairs (M, N)."""

    pairs = [_Pair(corpus[k], corpus[(k + 1) % len(corpus)]) for k in range(len(corpus))]
    return run_suite('support_identity', pairs,
                     lambda p: homological_support_check(_cyclic(p.left), _cyclic(p.right)).holds, parallel)


def ext_dimension_bound_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """dim Ext^i(M, S) <= d - i."""
    return run_suite('ext_dimension_bound', corpus, lambda I: ext_dimension_bound_check(_cyclic(I)), parallel)


def dim_formula_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """dim Ext^g(M, S) = dim M whenever the per-index bounds and g = d - dim M hold."""
    return run_suite('dimension_formula', corpus, lambda I: dim_formula_check(_cyclic(I)), parallel)


def ass_containment_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """Ass(M) inside the union of the minimal primes of the Ext annihilators; equality for Cohen-Macaulay M."""
    return run_suite('ass_containment', corpus, lambda I: ass_containment(_cyclic(I))['holds'], parallel)


def gamma_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """gamma(M) has the radical of Ann M for every corpus module of positive grade."""

    def check(ideal: Ideal) -> Outcome:
        module = _cyclic(ideal)
        if grade(module) == 0:
            return None
        return gamma(module).radical_equals(module.annihilator())

    return run_suite('gamma', corpus, check, parallel)


def betti_top_ext_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """mu(Ext^p(M, S)) = beta_p(M), p = pd M."""
    return run_suite('betti_top_ext', corpus, lambda I: betti_top_ext_check(_cyclic(I)), parallel)


def hann_containment_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """Hann(M) inside Ann(M), and Ann(M)^(pd - g + 1) inside Hann(M)."""
    return run_suite('hann_containment', corpus, lambda I: hann_containment_check(_cyclic(I)), parallel)


def gamma_grade_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """gamma(M) has the radical of Ann M exactly when grade M > 0, for S/I and for I."""

    def check(ideal: Ideal) -> bool:
        modules = (_cyclic(ideal), PresentedModule.from_ideal(ideal))
        return all(gamma_grade_check(module).passed for module in modules)

    return run_suite('gamma_grade', corpus, check, parallel)


def ext_shift_suite(corpus: Sequence[Ideal], parallel: bool = False, indices: Sequence[int] = (1, 2, 3)) -> SuiteResult:
    """Ext^i(I, S) and Ext^(i+1)(S/I, S) share normalized Hilbert series, annihilator and mu."""
    return run_suite('ext_shift', corpus, lambda I: all(ext_shift_check(I, i).equal for i in indices), parallel)


def grade_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """grade by Ext = grade by Koszul (enforced inside ``grade``), dimension by lead terms = by Hilbert pole
    (enforced inside ``dimension``), and depth <= dim <= d, grade + dim <= d."""

    def check(ideal: Ideal) -> bool:
        module = _cyclic(ideal)
        g, t, r, d = grade(module), depth(module), dimension(module), ideal.ring.dimension
        return t <= r <= d and g + r <= d

    return run_suite('grade', corpus, check, parallel)


def generator_count_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """mu(Ext^2(S/I, S)) = mu(I) - 1 with Betti numbers (1, mu, mu - 1) on height-two perfect ideals."""
    return run_suite('generator_count', corpus, generator_count_check, parallel)


def bridger_stability_suite(corpus: Sequence[Ideal], parallel: bool = False,
                            indices: Sequence[int] = (1, 2, 3)) -> SuiteResult:
    """M_(i,i) and M_(i,i,i,i) share normalized Hilbert series, annihilator and mu."""
    return run_suite('bridger_stability', corpus,
                     lambda I: all(bridger_stability_check(_cyclic(I), i).equal for i in indices), parallel)


def ext_duality_suite(corpus: Sequence[Ideal], parallel: bool = False) -> SuiteResult:
    """M and M_(g,g) agree on invariants for perfect S/I of grade g; other modules are skipped."""
    return run_suite('ext_duality', corpus, lambda I: ext_duality_check(_cyclic(I)), parallel)


def diagonal_stabilization_suite(corpus: Sequence[Ideal], parallel: bool = False, indices: Sequence[int] = (1, 2, 3),
                                 length: int = 5) -> SuiteResult:
    """The supports of M_(i,...,i) with p <= 3 indices cover those with p <= ``length``, and each p >= 4 matches
    p - 2 on invariants."""
    return run_suite('diagonal_stabilization', corpus,
                     lambda I: all(diagonal_stabilization_check(_cyclic(I), i, length).equal for i in indices),
                     parallel)


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    'support_identity': support_identity_suite,
    'ext_dimension_bound': ext_dimension_bound_suite,
    'dimension_formula': dim_formula_suite,
    'ass_containment': ass_containment_suite,
    'gamma': gamma_suite,
    'hann_containment': hann_containment_suite,
    'gamma_grade': gamma_grade_suite,
    'betti_top_ext': betti_top_ext_suite,
    'ext_shift': ext_shift_suite,
    'grade': grade_suite,
    'generator_count': generator_count_suite,
    'bridger_stability': bridger_stability_suite,
    'ext_duality': ext_duality_suite,
    'diagonal_stabilization': diagonal_stabilization_suite,
}
