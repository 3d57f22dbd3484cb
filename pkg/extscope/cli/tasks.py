"""Scenario task registry: what each op computes and how its results are compared with expectations."""

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Callable, Dict, Tuple

from extscope.errors import ParseError
from extscope.ext.ext import ExtResult, ext, ext_shift_check, iterated_ext
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.groebner.operations import syzygies
from extscope.groebner.submodule import SubmoduleOfFree
from extscope.invariants import (Gamma, HilbertSeries, ass_oracle, betti_top_ext_check, compute_invariants, depth,
                                 dim_formula_check, dimension, eass_experiment, gamma, gamma_grade_check,
                                 generator_count_check, grade, hann, hann_containment_check, hidden_primes,
                                 homological_support_check, nonvanishing_check, quasi_perfect_support_check)
from extscope.invariants.checks import CheckReport
from extscope.poly.parser import parse_generator_list

if TYPE_CHECKING:
    from extscope.cli.scenario import Scenario, Task

Values = Dict[str, Any]


@dataclass(frozen=True)
class TaskSpec:
    """How to run one op.

    :param run: Computes the result fields from the scenario and the task
    :param modules: Parameters naming module objects
    :param ideals: Parameters naming ideal objects
    :param required: Parameters that must be present
    :param fields: Result fields an expectation may name
    """

    run: Callable[['Scenario', 'Task'], Values]
    modules: Tuple[str, ...] = ()
    ideals: Tuple[str, ...] = ()
    required: Tuple[str, ...] = ()
    fields: Tuple[str, ...] = ()


def _module(scenario: 'Scenario', task: 'Task', key: str = 'module') -> PresentedModule:
    return scenario.objects[task.params[key]]


def _ideal(scenario: 'Scenario', task: 'Task', key: str = 'ideal') -> Ideal:
    return scenario.objects[task.params[key]]


def _target(scenario: 'Scenario', task: 'Task'):
    name = task.params.get('target')
    return scenario.objects[name] if name else scenario.ring


def _window(scenario: 'Scenario', task: 'Task'):
    window = task.params.get('window', scenario.window)
    return int(window) if window is not None else None


def _ext_values(result: ExtResult) -> Values:
    module = result.module
    return {
        'zero': result.is_zero(),
        'mu': result.mu(),
        'annihilator': result.annihilator,
        'dim': dimension(module),
        'hilbert': module.hilbert_series(),
        'presentation': module.minimal_presentation(),
    }


def _check_values(report: CheckReport) -> Values:
    return {'hypotheses': report.hypotheses, 'holds': report.holds, **report.details}


def run_ext(scenario, task):
    return _ext_values(ext(_module(scenario, task), _target(scenario, task), int(task.params['index'])))


def run_iterated_ext(scenario, task):
    return _ext_values(iterated_ext(_module(scenario, task), [int(i) for i in task.params['path']]))


def run_resolve(scenario, task):
    module = _module(scenario, task)
    resolution = module.resolution(int(task.params.get('up_to', scenario.ring.dimension + 1)))
    return {
        'betti': resolution.betti(),
        'graded_betti': resolution.graded_betti(),
        'complete': resolution.is_complete,
        'pd': resolution.projective_dimension,
    }


def run_cycles(scenario, task):
    """Kernel of d_(i+1)^T on Hom(F_i, R): the cycles whose quotient is Ext^i(M, R)."""

    module = _module(scenario, task)
    index = int(task.params['index'])
    resolution = module.resolution(index + 1)
    kernel = syzygies(resolution.differential(index + 1).transpose().image())
    return {'generators': kernel, 'count': len(kernel)}


def run_invariants(scenario, task):
    report = compute_invariants(_module(scenario, task), _window(scenario, task))
    return {
        'g': report.g,
        't': report.t,
        'r': report.r,
        'd': report.d,
        'pd': report.pd,
        'betti': report.betti,
        'mu': report.mu,
        'hilbert': report.hilbert,
        'ann': report.ann,
        'gamma': report.gamma,
        'hann': report.hann,
        'chain_holds': report.chain_holds,
        **report.flags,
    }


def run_grade(scenario, task):
    if 'ideal' in task.params:
        return {'grade': grade(_ideal(scenario, task), _target(scenario, task))}
    return {'grade': grade(_module(scenario, task))}


def run_dimension(scenario, task):
    subject = _ideal(scenario, task) if 'ideal' in task.params else _module(scenario, task)
    return {'dimension': dimension(subject)}


def run_gamma(scenario, task):
    value = gamma(_module(scenario, task), _window(scenario, task))
    return {'gamma': value, 'truncated': value.truncated}


def run_support_check(scenario, task):
    window = task.params.get('window')
    check = homological_support_check(_module(scenario, task), _target(scenario, task),
                                      int(window) if window is not None else None)
    return {'holds': check.holds, 'left': check.left.ideal, 'right': check.right.ideal}


def run_nonvanishing(scenario, task):
    check = nonvanishing_check(_module(scenario, task), _target(scenario, task))
    return {'holds': check.holds, 'first_nonzero': check.first_nonzero, 'grade': check.grade}


def run_quasi_perfect(scenario, task):
    check = quasi_perfect_support_check(_module(scenario, task), _window(scenario, task))
    return {'holds': check.holds, **check.details}


def run_ass_oracle(scenario, task):
    oracle = ass_oracle(_module(scenario, task))
    return {
        'primes': [record.prime for record in oracle.primes],
        'refined': [record.prime for record in oracle.refined],
        'unsupported': oracle.unsupported,
    }


def run_eass(scenario, task):
    support = task.params.get('support_ideal')
    report = eass_experiment(_ideal(scenario, task), int(task.params.get('window', 8)),
                             scenario.objects[support] if support else None)
    return {
        'verdict': report.verdict,
        'period': report.periodicity[0] if report.periodicity else None,
        'periodic_from': report.periodicity[1] if report.periodicity else None,
        'betti': report.betti,
        'annihilators': report.annihilators,
        'min_union': report.min_union,
        'unsupported': report.unsupported,
        'support_holds': report.support_holds,
    }


def run_ext_shift(scenario, task):
    comparison = ext_shift_check(_ideal(scenario, task), int(task.params['index']))
    return {
        'equal': comparison.equal,
        'hilbert_equal': comparison.hilbert_equal,
        'annihilator_equal': comparison.annihilator_equal,
        'mu_equal': comparison.mu_equal,
    }


EXT_FIELDS = ('zero', 'mu', 'annihilator', 'dim', 'hilbert', 'presentation')
CHECK_FIELDS = ('hypotheses', 'holds')
M = ('module',)

TASKS: Dict[str, TaskSpec] = {
    'ext': TaskSpec(run_ext, M, (), ('module', 'index'), EXT_FIELDS),
    'iterated_ext': TaskSpec(run_iterated_ext, M, (), ('module', 'path'), EXT_FIELDS),
    'resolve': TaskSpec(run_resolve, M, (), M, ('betti', 'graded_betti', 'complete', 'pd')),
    'cycles': TaskSpec(run_cycles, M, (), ('module', 'index'), ('generators', 'count')),
    'invariants': TaskSpec(run_invariants, M, (), M, (
        'g', 't', 'r', 'd', 'pd', 'betti', 'mu', 'hilbert', 'ann', 'gamma', 'hann', 'chain_holds', 'cohen_macaulay',
        'perfect', 'quasi_perfect', 'finite_pd', 'grade_le_depth'
    )),
    'grade': TaskSpec(run_grade, M, ('ideal',), (), ('grade',)),
    'depth': TaskSpec(lambda s, t: {'depth': depth(_module(s, t))}, M, (), M, ('depth',)),
    'dimension': TaskSpec(run_dimension, M, ('ideal',), (), ('dimension',)),
    'mu': TaskSpec(lambda s, t: {'mu': _module(s, t).mu()}, M, (), M, ('mu',)),
    'hilbert_series': TaskSpec(lambda s, t: {'hilbert': _module(s, t).hilbert_series()}, M, (), M, ('hilbert',)),
    'annihilator': TaskSpec(lambda s, t: {'annihilator': _module(s, t).annihilator()}, M, (), M, ('annihilator',)),
    'gamma': TaskSpec(run_gamma, M, (), M, ('gamma', 'truncated')),
    'hann': TaskSpec(lambda s, t: {'hann': hann(_module(s, t))}, M, (), M, ('hann',)),
    'support_check': TaskSpec(run_support_check, M, (), M, ('holds', 'left', 'right')),
    'nonvanishing_check': TaskSpec(run_nonvanishing, M, (), ('module', 'target'), ('holds', 'first_nonzero', 'grade')),
    'quasi_perfect_check': TaskSpec(run_quasi_perfect, M, (), M,
                                    ('holds', 'quasi_perfect', 'nonvanishing', 'hann_equals_ann')),
    'ass_oracle': TaskSpec(run_ass_oracle, M, (), M, ('primes', 'refined', 'unsupported')),
    'hidden_primes': TaskSpec(lambda s, t: {'primes': hidden_primes(_module(s, t))}, M, (), M, ('primes',)),
    'dim_formula_check': TaskSpec(lambda s, t: _check_values(dim_formula_check(_module(s, t))), M, (), M,
                                  CHECK_FIELDS + ('grade', 'dim', 'dim_ext_grade', 'support_equal', 'dimension_only',
                                                  'dim_ext_grade_equals_dim', 'dim_ext_grade_equals_d_minus_g')),
    'generator_count_check': TaskSpec(lambda s, t: _check_values(generator_count_check(_ideal(s, t))), (),
                                      ('ideal',), ('ideal',),
                                      CHECK_FIELDS + ('betti', 'pd', 'grade', 'mu', 'mu_ext', 'hilbert_burch')),
    'betti_top_ext_check': TaskSpec(lambda s, t: _check_values(betti_top_ext_check(_module(s, t))), M, (), M,
                                    CHECK_FIELDS + ('pd', 'betti', 'mu_ext')),
    'hann_containment_check': TaskSpec(lambda s, t: _check_values(hann_containment_check(_module(s, t))), M, (), M,
                                       CHECK_FIELDS + ('hann_in_ann', 'power_in_hann')),
    'gamma_grade_check': TaskSpec(lambda s, t: _check_values(gamma_grade_check(_module(s, t))), M, (), M,
                                  CHECK_FIELDS + ('grade', 'radical_equal')),
    'eass': TaskSpec(run_eass, (), ('ideal', 'support_ideal'), ('ideal',), (
        'verdict', 'period', 'periodic_from', 'betti', 'annihilators', 'min_union', 'unsupported', 'support_holds'
    )),
    'ext_shift': TaskSpec(run_ext_shift, (), ('ideal',), ('ideal', 'index'),
                          ('equal', 'hilbert_equal', 'annihilator_equal', 'mu_equal')),
}


def validate_task(task: 'Task', objects: Dict[str, Any]) -> None:
    """Reject missing parameters, references to undefined or mistyped objects and unknown expectation keys.

    :raise ParseError: on the first problem found
    """

    spec = TASKS[task.op]
    for key in spec.required:
        if key not in task.params:
            raise ParseError(f"task {task.op!r} needs {key!r}")

    for key, kind in [(k, PresentedModule) for k in spec.modules + ('target',)] + [(k, Ideal) for k in spec.ideals]:
        name = task.params.get(key)
        if name is None:
            continue
        if name not in objects:
            raise ParseError(f"task {task.op!r}: {key} refers to undefined object {name!r}")
        if not isinstance(objects[name], kind):
            raise ParseError(f"task {task.op!r}: {key} {name!r} is not a{'n ideal' if kind is Ideal else ' module'}")

    if task.op in ('grade', 'dimension') and not ({'module', 'ideal'} & set(task.params)):
        raise ParseError(f"task {task.op!r} needs a module or an ideal")

    unknown = sorted(set(task.expect) - set(spec.fields))
    if unknown:
        raise ParseError(f"task {task.op!r} cannot check {', '.join(unknown)}")


def _as_ideal(ring, value: Any) -> Ideal:
    if isinstance(value, str):
        value = [value]
    return Ideal(ring, parse_generator_list(ring, [str(v) for v in value]))


def _ideal_key(ideal: Ideal) -> Tuple[str, ...]:
    return tuple(sorted(str(g) for g in ideal.minimal_generators().generators))


def matches(actual: Any, expected: Any, ring) -> bool:
    """Compare a computed value with its expectation.

    Ideals compare as ideals (``{radical = [...]}`` compares radicals), Hilbert series by their
    normalized rational function, submodules as submodules, prime lists as sets, infinity as ``"inf"``.
    """

    if isinstance(actual, Gamma):
        return actual.radical_equals(_as_ideal(ring, expected))
    if isinstance(actual, Ideal):
        if isinstance(expected, dict) and 'radical' in expected:
            return actual.radical_equals(_as_ideal(ring, expected['radical']))
        return actual.equals(_as_ideal(ring, expected))
    if isinstance(actual, HilbertSeries):
        return actual.normalized().matches(str(expected))
    if isinstance(actual, SubmoduleOfFree):
        columns = [parse_generator_list(ring, [str(e) for e in column]) for column in expected]
        return actual.equals(SubmoduleOfFree(ring, actual.twists, columns))
    if isinstance(actual, list) and actual and all(isinstance(a, Ideal) for a in actual):
        return {_ideal_key(a) for a in actual} == {_ideal_key(_as_ideal(ring, e)) for e in expected}
    if isinstance(actual, list) and isinstance(expected, list) and not actual:
        return not expected
    if isinstance(actual, float) and math.isinf(actual):
        return expected == 'inf'
    if isinstance(actual, tuple):
        actual = list(actual)
    return actual == expected


def evidence(actual: Any) -> str:
    """Hilbert-series comparisons are evidence of an isomorphism, not a proof of one."""
    return 'invariant-level' if isinstance(actual, HilbertSeries) else 'exact'
