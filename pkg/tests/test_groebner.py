"""Test the Groebner engine and the ideal toolbox."""

from itertools import combinations

import numpy as np
import pytest
from expects import be_false, be_true, contain, equal, expect, have_len, raise_error
from sympy.polys.monomials import monomial_divides, monomial_lcm

from extscope.errors import DegreeCapExceeded, UnsupportedError, UsageError
from extscope.ext import PresentedModule
from extscope.groebner import (Ideal, SubmoduleOfFree, intersect_all, monomial_associated_primes,
                               monomial_minimal_primes, radical_membership, syzygies)
from extscope.invariants import monomial_corpus
from extscope.invariants.corpus import random_monomial
from extscope.poly import Polynomial, parse_ring


@pytest.fixture(name='ring')
def fixture_ring():
    return parse_ring('QQ[x,y,z]')


def _keys(ideals):
    return sorted(tuple(str(g) for g in ideal.generators) for ideal in ideals)


class TestGroebnerBases:
    """Reduced bases and membership."""

    def test_membership(self, ring):
        ideal = Ideal(ring, ['x^2 - y^2', 'xy'])

        expect(ideal.contains('y^3')).to(be_true)
        expect('x^3' in ideal).to(be_true)
        expect(ideal.contains('x')).to(be_false)

    def test_basis_is_reduced(self, ring):
        basis = Ideal(ring, ['xy', 'xy + xz', 'xz']).groebner_basis()

        expect(sorted(str(g) for g in basis)).to(equal(['x*y', 'x*z']))

    def test_unit_and_zero_ideals(self, ring):
        expect(Ideal.unit(ring).is_unit()).to(be_true)
        expect(Ideal.zero(ring).is_zero()).to(be_true)

    def test_monomial_detection(self, ring):
        expect(Ideal(ring, ['xy', 'xz']).is_monomial()).to(be_true)
        expect(Ideal(ring, ['xy - z^2']).is_monomial()).to(be_false)

    def test_degree_cap(self):
        ring = parse_ring('QQ[x,y]', degree_cap=2)

        expect(lambda: Ideal(ring, ['x^2 + y^2', 'xy']).groebner_basis()).to(raise_error(DegreeCapExceeded))

    def test_degree_cap_exits_as_computation_error(self):
        expect(DegreeCapExceeded(2, 3).exit_code).to(equal(3))

    def test_membership_in_a_quotient_ring(self):
        ring = parse_ring('QQ[x,y,z]/(x^2,xy,xz)')

        expect(Ideal(ring, ['y']).contains('xy + y^2')).to(be_true)
        expect(Ideal.zero(ring).contains('x^2')).to(be_true)


class TestIdealOperations:
    """Sums, products, intersections, quotients and radicals."""

    def test_intersection(self, ring):
        ideal = Ideal(ring, ['x']).intersect(Ideal(ring, ['y', 'z']))

        expect(ideal.equals(Ideal(ring, ['xy', 'xz']))).to(be_true)

    def test_intersect_all(self, ring):
        ideals = [Ideal(ring, ['x']), Ideal(ring, ['y']), Ideal(ring, ['z'])]

        expect(intersect_all(ideals, ring).equals(Ideal(ring, ['xyz']))).to(be_true)
        expect(intersect_all([], ring).is_unit()).to(be_true)

    def test_product_and_sum(self, ring):
        left, right = Ideal(ring, ['x']), Ideal(ring, ['y', 'z'])

        expect((left * right).equals(Ideal(ring, ['xy', 'xz']))).to(be_true)
        expect((left + right).equals(Ideal.maximal(ring))).to(be_true)

    def test_power(self, ring):
        expect(Ideal(ring, ['x', 'y']).power(2).mu()).to(equal(3))
        expect(Ideal(ring, ['x']).power(0).is_unit()).to(be_true)

    def test_quotient(self, ring):
        ideal = Ideal(ring, ['xy', 'xz'])

        expect(ideal.quotient(ring('x')).equals(Ideal(ring, ['y', 'z']))).to(be_true)
        expect(ideal.quotient(Ideal(ring, ['y', 'z'])).equals(Ideal(ring, ['x']))).to(be_true)

    def test_radical_membership(self, ring):
        ideal = Ideal(ring, ['x^2', 'y^3'])

        expect(ideal.radical_contains('x')).to(be_true)
        expect(ideal.radical_contains('x + y')).to(be_true)
        expect(ideal.radical_contains('z')).to(be_false)

    def test_radical_equality(self, ring):
        expect(Ideal(ring, ['x^2', 'xy']).radical_equals(Ideal(ring, ['x']))).to(be_false)
        expect(Ideal(ring, ['x^2', 'y^2']).radical_equals(Ideal(ring, ['x', 'y']))).to(be_true)

    def test_minimal_generators(self, ring):
        ideal = Ideal(ring, ['xy', 'xz', 'x^2y', 'xy + xz'])

        expect(ideal.mu()).to(equal(2))
        expect(ideal.minimal_generators().generators).to(have_len(2))

    def test_mixing_rings_is_a_usage_error(self, ring):
        other = parse_ring('QQ[a,b]')

        expect(lambda: Ideal(ring, ['x']) + Ideal(other, ['a'])).to(raise_error(UsageError))


class TestSubmodules:
    """Submodules of free modules and syzygies."""

    def test_syzygies_of_a_regular_sequence(self, ring):
        relations = syzygies(Ideal(ring, ['x', 'y']))
        expected = SubmoduleOfFree(ring, (1, 1), [(ring('y'), ring('-x'))])

        expect(relations.equals(expected)).to(be_true)

    def test_syzygies_of_xy_xz(self, ring):
        relations = syzygies(Ideal(ring, ['xy', 'xz']))

        expect(len(relations.nonzero())).to(equal(1))
        expect(relations.contains((ring('z'), ring('-y')))).to(be_true)

    def test_syzygies_over_a_quotient_ring(self):
        ring = parse_ring('QQ[x,y,z]/(x^2,xy,xz)')
        relations = syzygies(Ideal(ring, ['x']))

        for variable in ('x', 'y', 'z'):
            expect(relations.contains((ring(variable),))).to(be_true)

    def test_submodule_equality(self, ring):
        left = SubmoduleOfFree(ring, (0, 0), [(ring('x'), ring('0')), (ring('0'), ring('x'))])
        right = SubmoduleOfFree(ring, (0, 0), [(ring('x'), ring('x')), (ring('x'), ring('-x'))])

        expect(left.equals(right)).to(be_true)
        expect(left.contains((ring('y'), ring('0')))).to(be_false)

    def test_rejects_columns_of_the_wrong_length(self, ring):
        expect(lambda: SubmoduleOfFree(ring, (0, 0), [(ring('x'),)])).to(raise_error(UsageError))


class TestMonomialPrimes:
    """Minimal and associated primes of monomial ideals."""

    def test_minimal_primes(self, ring):
        primes = monomial_minimal_primes(Ideal(ring, ['xy', 'xz']))

        expect(_keys(primes)).to(equal([('x',), ('y', 'z')]))

    def test_associated_primes_include_embedded_ones(self, ring):
        primes = monomial_associated_primes(Ideal(ring, ['x^2', 'xy']))

        expect(_keys(primes)).to(equal([('x',), ('x', 'y')]))

    def test_associated_primes_of_a_cohen_macaulay_ideal(self, ring):
        primes = monomial_associated_primes(Ideal(ring, ['xy', 'xz', 'yz']))

        expect(_keys(primes)).to(equal([('x', 'y'), ('x', 'z'), ('y', 'z')]))

    def test_non_monomial_ideals_are_unsupported(self, ring):
        expect(lambda: monomial_minimal_primes(Ideal(ring, ['x + y']))).to(raise_error(UnsupportedError))

    def test_minimal_primes_are_among_associated_ones(self, ring):
        ideal = Ideal(ring, ['x^2', 'xy'])
        associated = _keys(monomial_associated_primes(ideal))

        for prime in _keys(monomial_minimal_primes(ideal)):
            expect(associated).to(contain(prime))


class TestWeightedOrders:
    """Groebner bases for a grading with weights (1, 2, 3)."""

    def test_curve_through_the_weighted_grading(self):
        ring = parse_ring('QQ[x:1,y:2,z:3]')
        ideal = Ideal(ring, ['y - x^2', 'z - x^3'])

        expect(ideal.contains('xz - y^2')).to(be_true)
        expect(ideal.contains('z^2 - y^3')).to(be_true)
        expect(ideal.contains('xy - z')).to(be_true)
        expect(ideal.contains('y')).to(be_false)
        expect(sorted(ideal.leading_monomials())).to(equal([(0, 2, 0), (1, 1, 0), (2, 0, 0)]))


SEEDS = (0, 1, 2)


def _random_form(ring, rng, degree, terms=3):
    coefficients = {}
    for _ in range(terms):
        a = int(rng.integers(0, degree + 1))
        b = int(rng.integers(0, degree - a + 1))
        coefficients[(a, b, degree - a - b)] = int(rng.choice([-3, -2, -1, 1, 2, 3]))
    return Polynomial(ring, coefficients)


def _random_forms(ring, rng, count=3):
    return [_random_form(ring, rng, int(rng.integers(1, 3))) for _ in range(count)]


class TestRandomizedGroebner:
    """Engine properties on seeded random homogeneous input."""

    @pytest.mark.parametrize('seed', SEEDS)
    def test_every_s_pair_reduces_to_zero(self, ring, seed):
        rng = np.random.default_rng(seed)
        ideal_basis = Ideal(ring, _random_forms(ring, rng)).groebner()
        columns = [(_random_form(ring, rng, 2), _random_form(ring, rng, 2)) for _ in range(3)]
        module_basis = SubmoduleOfFree(ring, (0, 0), columns).groebner()

        for basis in (ideal_basis, module_basis):
            engine, elements = basis.engine, basis.elements
            for i, f in enumerate(elements):
                for g in elements[i + 1:]:
                    if f.lead[0] != g.lead[0]:
                        continue
                    lcm = monomial_lcm(f.lead[1], g.lead[1])
                    expect(engine.reduce(engine.spoly(f, g, lcm), elements)).to(equal({}))

    @pytest.mark.parametrize('seed', SEEDS)
    def test_syzygies_are_relations(self, ring, seed):
        rng = np.random.default_rng(seed)
        generators = Ideal(ring, _random_forms(ring, rng)).generators
        relations = syzygies(Ideal(ring, generators))

        for column in relations.generators:
            total = Polynomial(ring, {})
            for z, g in zip(column, generators):
                total = total + z * g
            expect(total.is_zero()).to(be_true)

        for j, k in combinations(range(len(generators)), 2):
            koszul = [Polynomial(ring, {})] * len(generators)
            koszul[j], koszul[k] = generators[k], -generators[j]
            expect(relations.contains(tuple(koszul))).to(be_true)

    @pytest.mark.parametrize('seed', SEEDS)
    def test_colon_times_element_lies_in_the_ideal(self, ring, seed):
        rng = np.random.default_rng(seed)
        ideal = Ideal(ring, _random_forms(ring, rng))
        element = _random_form(ring, rng, 1, terms=2)
        colon = ideal.quotient(element)

        for q in colon.generators:
            expect(ideal.contains(q * element)).to(be_true)
        expect(colon.contains_ideal(ideal)).to(be_true)

    @pytest.mark.parametrize('seed', SEEDS)
    def test_radical_membership_agrees_with_powers(self, ring, seed):
        rng = np.random.default_rng(seed)

        for ideal in monomial_corpus(4, seed):
            for _ in range(4):
                element = random_monomial(ring, rng, max_exponent=4)
                by_powers = any(ideal.contains(element ** k) for k in range(1, 6))
                expect(radical_membership(element, ideal)).to(equal(by_powers))

    @pytest.mark.parametrize('seed', SEEDS)
    def test_monomial_membership_is_divisibility(self, ring, seed):
        rng = np.random.default_rng(seed)

        for ideal in monomial_corpus(4, seed):
            for _ in range(6):
                element = random_monomial(ring, rng, max_exponent=4)
                divisible = any(monomial_divides(g.leading_monomial, element.leading_monomial)
                                for g in ideal.generators)
                expect(ideal.contains(element)).to(equal(divisible))

    @pytest.mark.parametrize('seed', SEEDS)
    def test_betti_numbers_ignore_generator_order(self, ring, seed):
        rng = np.random.default_rng(seed)
        ideals = monomial_corpus(2, seed) + [Ideal(ring, _random_forms(ring, rng))]

        for ideal in ideals:
            generators = ideal.generators
            shuffled = [generators[k] for k in rng.permutation(len(generators))]
            expected = PresentedModule.cyclic(ideal).resolution(4).graded_betti()

            expect(PresentedModule.cyclic(Ideal(ring, shuffled)).resolution(4).graded_betti()).to(equal(expected))
