"""Test the invariants layer: Hilbert series, dimension, depth, annihilator ideals, supports, checks and suites."""

import math

import pytest
from expects import be_false, be_none, be_true, contain, equal, expect, have_len, raise_error
from testfixtures import LogCapture

from extscope.complexes import ModuleMap
from extscope.errors import UsageError
from extscope.ext import PresentedModule
from extscope.groebner import Ideal
from extscope.invariants import (HilbertSeries, ass_containment, ass_oracle, betti_top_ext_check, compute_invariants,
                                 depth, detect_periodicity, dim_formula_check, dimension, eass_experiment,
                                 ext_dimension_bound_check, gamma, gamma_grade_check, generator_count_check, grade,
                                 grade_by_koszul, hann, hann_containment_check, height_two_perfect_corpus,
                                 hidden_primes, hilbert_series, hilbert_series_from_resolution,
                                 homological_support_check, homological_window, is_cohen_macaulay, monomial_corpus,
                                 nonvanishing_check, nonvanishing_indices, projective_dimension,
                                 quasi_perfect_support_check, run_suite)
from extscope.invariants.suites import generator_count_suite, grade_suite
from extscope.poly import parse_ring


@pytest.fixture(name='ring')
def fixture_ring():
    return parse_ring('QQ[x,y,z]')


@pytest.fixture(name='module')
def fixture_module(ring):
    return PresentedModule.cyclic(Ideal(ring, ['xy', 'xz']))


@pytest.fixture(name='perfect')
def fixture_perfect(ring):
    return PresentedModule.cyclic(Ideal(ring, ['xy', 'xz', 'yz']))


@pytest.fixture(name='quotient')
def fixture_quotient():
    return parse_ring('QQ[x,y,z]/(x^2,xy,xz)')


class TestHilbertSeries:
    """Series, normal forms and pole orders."""

    def test_cyclic_module(self, module):
        series = hilbert_series(module)

        expect(series.matches('(1 - 2*t^2 + t^3)/(1-t)^3')).to(be_true)
        expect(series.dimension()).to(equal(2))

    def test_reduced_form(self, module):
        expect(hilbert_series(module).reduced()).to(equal(({0: 1, 1: 1, 2: -1}, 2)))

    def test_normalization_and_shift(self):
        series = HilbertSeries({2: 1, 3: -1}, (1, 1))

        expect(series.normalized()).to(equal(HilbertSeries({0: 1, 1: -1}, (1, 1))))
        expect(series.normalized().shift(2)).to(equal(series))

    def test_zero_series(self):
        series = HilbertSeries({0: 0}, (1, 1, 1))

        expect(series.is_zero()).to(be_true)
        expect(series.dimension()).to(equal(-1))

    def test_series_from_the_resolution(self, module):
        expect(hilbert_series_from_resolution(module.resolution(4))).to(equal(hilbert_series(module)))

    def test_resolution_series_needs_a_polynomial_ring(self, quotient):
        resolution = PresentedModule.cyclic(Ideal(quotient, ['x'])).resolution(3)

        expect(lambda: hilbert_series_from_resolution(resolution)).to(raise_error(UsageError))

    def test_sums_need_the_same_grading(self):
        expect(lambda: HilbertSeries({0: 1}, (1,)) + HilbertSeries({0: 1}, (1, 1))).to(raise_error(UsageError))


class TestWindow:
    """Homological windows."""

    def test_explicit_window(self, ring):
        expect(homological_window(ring, 5)).to(equal(5))

    def test_defaults_to_dimension_plus_one(self, ring, monkeypatch):
        monkeypatch.delenv('EXTSCOPE_WINDOW', raising=False)

        expect(homological_window(ring)).to(equal(4))

    def test_reads_the_environment(self, ring, monkeypatch):
        monkeypatch.setenv('EXTSCOPE_WINDOW', '2')

        expect(homological_window(ring)).to(equal(2))

    def test_rejects_negative_windows(self, ring):
        expect(lambda: homological_window(ring, -1)).to(raise_error(UsageError))


class TestDimensionAndDepth:
    """dim, depth, grade and projective dimension."""

    def test_dimension(self, ring, module):
        expect(dimension(module)).to(equal(2))
        expect(dimension(Ideal(ring, ['xy', 'xz']))).to(equal(2))
        expect(dimension(Ideal.unit(ring))).to(equal(-1))
        expect(dimension(PresentedModule.zero(ring))).to(equal(-1))

    def test_depth(self, ring, module):
        expect(depth(module)).to(equal(1))
        expect(depth(PresentedModule.free(ring))).to(equal(3))
        expect(depth(PresentedModule.cyclic(Ideal.maximal(ring)))).to(equal(0))
        expect(depth(PresentedModule.zero(ring))).to(equal(math.inf))

    def test_grade(self, ring, module):
        expect(grade(module)).to(equal(1))
        expect(grade(Ideal(ring, ['x', 'y']))).to(equal(2))
        expect(grade_by_koszul(Ideal.maximal(ring))).to(equal(3))

    def test_grade_of_a_zero_divisor(self, quotient):
        expect(grade(PresentedModule.cyclic(Ideal(quotient, ['x'])))).to(equal(0))

    def test_projective_dimension(self, module):
        expect(projective_dimension(module)).to(equal(2))

    def test_infinite_projective_dimension_is_logged(self, quotient):
        with LogCapture(names='extscope', attributes=('levelname', 'message')) as capture:
            pd = projective_dimension(PresentedModule.cyclic(Ideal(quotient, ['x'])), 3)

        expect(pd).to(equal(math.inf))
        expect(capture.actual()).to(contain(('WARNING', 'resolution does not end inside the window')))

    def test_cohen_macaulay(self, module, perfect):
        expect(is_cohen_macaulay(perfect)).to(be_true)
        expect(is_cohen_macaulay(module)).to(be_false)


class TestAnnihilatorIdeals:
    """gamma and Hann."""

    def test_gamma_of_xy_xz(self, ring, module):
        result = gamma(module)

        expect(result.radical_equals(Ideal(ring, ['xy', 'xz']))).to(be_true)
        expect(result.truncated).to(be_false)
        expect(result.contains('xy')).to(be_true)

    def test_hann_of_xy_xz(self, ring, module):
        expect(hann(module).equals(Ideal(ring, ['xy', 'xz']))).to(be_true)

    def test_gamma_of_free_plus_module(self, ring, module):
        total = PresentedModule.free(ring).direct_sum(module)

        expect(gamma(total).radical_equals(Ideal(ring, ['xy', 'xz']))).to(be_true)
        expect(total.annihilator().is_zero()).to(be_true)

    def test_gamma_of_the_ideal_module(self, ring):
        ideal = PresentedModule.from_ideal(Ideal(ring, ['xy', 'xz']))

        expect(gamma(ideal).radical_equals(Ideal(ring, ['y', 'z']))).to(be_true)

    def test_zero_module(self, ring):
        expect(gamma(PresentedModule.zero(ring)).ideal.is_unit()).to(be_true)
        expect(hann(PresentedModule.zero(ring)).is_unit()).to(be_true)


class TestSupports:
    """Support identities and nonvanishing indices."""

    def test_homological_support(self, ring, module):
        check = homological_support_check(module, PresentedModule.cyclic(Ideal(ring, ['y'])))

        expect(check.holds).to(be_true)

    def test_nonvanishing(self, ring, module):
        check = nonvanishing_check(module, PresentedModule.cyclic(Ideal(ring, ['y'])))

        expect(check.first_nonzero).to(equal(1))
        expect(check.holds).to(be_true)

    def test_nonvanishing_indices(self, module):
        expect(nonvanishing_indices(module)).to(equal([1, 2]))

    def test_quasi_perfect_support(self, module, perfect):
        expect(quasi_perfect_support_check(perfect).holds).to(be_true)
        expect(quasi_perfect_support_check(perfect).details['hann_equals_ann']).to(be_true)

        mixed = quasi_perfect_support_check(module)
        expect(mixed.holds).to(be_false)
        expect(mixed.details['quasi_perfect']).to(be_false)


class TestPrimes:
    """Associated-prime oracles."""

    def test_oracle_of_xy_xz(self, module):
        oracle = ass_oracle(module)

        expect(oracle.prime_keys()).to(equal([('x',), ('y', 'z')]))
        expect([record.indices for record in oracle.refined]).to(equal([[1], [2]]))
        expect(oracle.complete).to(be_true)

    def test_no_hidden_primes(self, module):
        expect(hidden_primes(module)).to(have_len(0))

    def test_containment(self, module):
        outcome = ass_containment(module)

        expect(outcome['contained']).to(be_true)
        expect(outcome['cohen_macaulay']).to(be_false)
        expect(outcome['holds']).to(be_true)


class TestChecks:
    """Checkers and their hypotheses."""

    def test_dimension_formula_holds_without_equal_supports(self, module):
        report = dim_formula_check(module)

        expect(report.hypotheses).to(be_true)
        expect(report.holds).to(be_true)
        expect(report.details['support_equal']).to(be_false)
        expect(report.details['dimension_only']).to(be_true)

    def test_dimension_formula_on_a_perfect_module(self, perfect):
        report = dim_formula_check(perfect)

        expect(report.holds).to(be_true)
        expect(report.details['support_equal']).to(be_true)

    def test_ext_dimension_bound(self, module, quotient):
        expect(ext_dimension_bound_check(module).holds).to(be_true)

        skipped = ext_dimension_bound_check(PresentedModule.cyclic(Ideal(quotient, ['x'])))
        expect(skipped.holds).to(be_none)
        expect(skipped.passed).to(be_true)

    def test_generator_count(self, ring):
        report = generator_count_check(Ideal(ring, ['xy', 'xz', 'yz']))

        expect(report.holds).to(be_true)
        expect(report.details['betti']).to(equal([1, 3, 2]))
        expect(report.details['mu_ext']).to(equal(2))

    def test_generator_count_needs_height_two(self, ring):
        report = generator_count_check(Ideal(ring, ['xy', 'xz']))

        expect(report.hypotheses).to(be_false)
        expect(report.holds).to(be_none)

    def test_betti_top_ext(self, module):
        report = betti_top_ext_check(module)

        expect(report.holds).to(be_true)
        expect(report.details['mu_ext']).to(equal(1))

    def test_hann_containment(self, module):
        report = hann_containment_check(module)

        expect(report.holds).to(be_true)
        expect(report.details['exponent']).to(equal(2))

    def test_gamma_grade(self, ring, module):
        expect(gamma_grade_check(module).holds).to(be_true)

        ideal = gamma_grade_check(PresentedModule.from_ideal(Ideal(ring, ['xy', 'xz'])))
        expect(ideal.holds).to(be_true)
        expect(ideal.details['radical_equal']).to(be_false)

    def test_check_json(self, ring):
        payload = generator_count_check(Ideal(ring, ['x', 'y'])).to_json()

        expect(payload['check']).to(equal('generator_count'))
        expect(payload['betti']).to(equal([1, 2, 1]))


class TestPeriodicity:
    """Periodic resolutions and the eventual-support experiment."""

    def test_detects_a_period(self, ring):
        x, y = ModuleMap.from_rows(ring, [[ring('x')]]), ModuleMap.from_rows(ring, [[ring('y')]])
        scaled = ModuleMap.from_rows(ring, [[ring('2x')]])
        z = ModuleMap.from_rows(ring, [[ring('z')]])

        expect(detect_periodicity([x, y, scaled, y])).to(equal((2, 1)))
        expect(detect_periodicity([z, x, y, scaled, y])).to(equal((2, 2)))
        expect(detect_periodicity([x, y])).to(be_none)

    def test_periodic_resolution_in_characteristic_five(self):
        ring = parse_ring('F5[X,Y,Z]/((X+Y+Z)^5)')
        report = eass_experiment(Ideal(ring, ['(x+y+z)^2']), window=8)

        expect(report.periodicity).to(equal((2, 1)))
        expect(report.verdict).to(equal('finiteness evidence: periodic from step 1'))
        expect(report.complete).to(be_false)

    def test_finite_projective_dimension(self, ring):
        report = eass_experiment(Ideal(ring, ['xy', 'xz']), window=4)

        expect(report.verdict).to(equal('finite projective dimension'))
        expect(report.to_json()['period']).to(be_none)

    def test_window_must_be_large_enough(self, ring):
        expect(lambda: eass_experiment(Ideal(ring, ['x']), window=3)).to(raise_error(UsageError))

    @pytest.mark.parametrize('text, generator', [
        ('QQ[x,y]/(xy)', 'x'),
        ('QQ[x,y,z]/(x^2y)', 'x^2'),
        ('F5[X,Y,Z]/((X+Y+Z)^5)', '(x+y+z)^2'),
    ])
    def test_hypersurface_resolutions_have_period_two(self, text, generator):
        ring = parse_ring(text)
        resolution = PresentedModule.cyclic(Ideal(ring, [generator])).resolution(6)
        differentials = [resolution.differential(k) for k in range(1, 7)]

        expect(resolution.betti()).to(equal([1] * 7))
        expect(detect_periodicity(differentials)).to(equal((2, 1)))


class TestDepthFormula:
    """pd M + depth M = dim S for S = QQ[x,y,z]."""

    @pytest.mark.parametrize('seed', [0, 1, 2])
    def test_over_the_monomial_corpus(self, ring, seed):
        for ideal in monomial_corpus(6, seed):
            module = PresentedModule.cyclic(ideal)

            expect(projective_dimension(module) + depth(module)).to(equal(ring.dimension))
            expect(grade(module) <= projective_dimension(module)).to(be_true)

    def test_perfect_module(self, perfect):
        expect(projective_dimension(perfect)).to(equal(2))
        expect(depth(perfect)).to(equal(1))


class TestReports:
    """Whole invariant reports."""

    def test_report_of_xy_xz(self, module):
        payload = compute_invariants(module).to_json()

        expect((payload['g'], payload['t'], payload['r'], payload['d'])).to(equal((1, 1, 2, 3)))
        expect(payload['betti']).to(equal([1, 2, 1]))
        expect(payload['chain_holds']).to(be_true)
        expect(payload['flags']).to(equal({
            'cohen_macaulay': False,
            'finite_pd': True,
            'grade_le_depth': True,
            'perfect': False,
            'quasi_perfect': False,
        }))

    def test_report_of_the_zero_module(self, ring):
        payload = compute_invariants(PresentedModule.zero(ring)).to_json()

        expect(payload['r']).to(equal(-1))
        expect(payload['g']).to(equal('inf'))
        expect(payload['chain_holds']).to(be_true)


class TestCorpora:
    """Seeded corpora and property suites."""

    def test_same_seed_same_corpus(self):
        first = [str(ideal) for ideal in monomial_corpus(6, seed=3)]
        second = [str(ideal) for ideal in monomial_corpus(6, seed=3)]

        expect(first).to(equal(second))
        expect(first).to(have_len(6))

    def test_height_two_corpus_starts_with_xy_xz_yz(self, ring):
        corpus = height_two_perfect_corpus(4, seed=1)

        expect(corpus).to(have_len(4))
        expect(corpus[0].equals(Ideal(ring, ['xy', 'xz', 'yz']))).to(be_true)

    def test_generator_count_suite(self):
        result = generator_count_suite(height_two_perfect_corpus(4, seed=1))

        expect(result.passed).to(be_true)
        expect(result.checked).to(equal(4))

    def test_grade_suite(self):
        expect(grade_suite(monomial_corpus(3, seed=0)).passed).to(be_true)

    def test_run_suite_counts_outcomes(self):
        def check(n):
            if n == 4:
                raise UsageError('bad item')
            return None if n == 1 else n == 2

        result = run_suite('demo', [1, 2, 3, 4], check)

        expect((result.checked, result.skipped)).to(equal((3, 1)))
        expect([failure['item'] for failure in result.failures]).to(equal(['3', '4']))
        expect(result.failures[1]['error_type']).to(equal('UsageError'))

    def test_run_suite_in_parallel(self):
        result = run_suite('demo', list(range(6)), lambda n: n >= 0, parallel=True)

        expect(result.passed).to(be_true)
        expect(result.checked).to(equal(6))
