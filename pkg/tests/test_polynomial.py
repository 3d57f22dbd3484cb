"""Test polynomial text, rings and coefficient fields."""

from fractions import Fraction

import numpy as np
import pytest
from expects import be_false, be_true, equal, expect, raise_error
from sympy.polys.monomials import monomial_divides, monomial_mul

from extscope.errors import InhomogeneousError, ParseError, UsageError
from extscope.poly import (ANY_DEGREE, CoefficientField, MonomialOrder, Polynomial, divide_with_remainder,
                           homogeneity_check, parse_generators, parse_polynomial, parse_ring, weighted_degree)
from extscope.poly.ring import combinatorial_dimension


@pytest.fixture(name='ring')
def fixture_ring():
    return parse_ring('QQ[x,y,z]')


class TestParsing:
    """Text syntax of polynomials."""

    def test_reads_implicit_products_and_rationals(self, ring):
        polynomial = parse_polynomial(ring, '3x^2y - 1/2 z^3')

        expect(str(polynomial)).to(equal('3*x^2*y - 1/2*z^3'))

    def test_accepts_python_operators(self, ring):
        expect(parse_polynomial(ring, '3*x**2*y')).to(equal(parse_polynomial(ring, '3x^2y')))

    def test_expands_powers_of_sums(self, ring):
        polynomial = parse_polynomial(ring, '(x+y)^2')

        expect(str(polynomial)).to(equal('x^2 + 2*x*y + y^2'))

    def test_matches_capital_variable_names(self, ring):
        expect(parse_polynomial(ring, 'X*Y')).to(equal(parse_polynomial(ring, 'xy')))

    def test_rejects_unknown_names(self, ring):
        expect(lambda: parse_polynomial(ring, 'x + w')).to(raise_error(ParseError))

    def test_rejects_malformed_text(self, ring):
        expect(lambda: parse_polynomial(ring, 'x +* y')).to(raise_error(ParseError))
        expect(lambda: parse_polynomial(ring, '   ')).to(raise_error(ParseError))

    def test_rejects_non_polynomials(self, ring):
        expect(lambda: parse_polynomial(ring, '1/x')).to(raise_error(ParseError))

    def test_splits_generator_lists(self, ring):
        expect([str(g) for g in parse_generators(ring, '(xy, xz)')]).to(equal(['x*y', 'x*z']))
        expect(len(parse_generators(ring, '(x+y+z)^5'))).to(equal(1))

    def test_parse_error_exits_with_usage_status(self):
        expect(ParseError.exit_code).to(equal(2))


class TestRings:
    """Ring text, quotient rings and Krull dimension."""

    def test_polynomial_ring_dimension(self, ring):
        expect(ring.dimension).to(equal(3))
        expect(ring.is_polynomial_ring).to(be_true)

    def test_quotient_ring_dimension(self):
        quotient = parse_ring('QQ[x,y,z]/(x^2,xy,xz)')

        expect(quotient.dimension).to(equal(2))
        expect(quotient.is_polynomial_ring).to(be_false)

    def test_reduces_into_normal_form(self):
        quotient = parse_ring('QQ[x,y,z]/(x^2,xy,xz)')

        expect(quotient('xy + z')).to(equal(quotient('z')))
        expect(quotient('x^3').is_zero()).to(be_true)

    def test_lowercases_variables_and_reads_quotient_in_capitals(self):
        quotient = parse_ring('F5[X,Y,Z]/(X+Y+Z)^5')

        expect(quotient.variables).to(equal(('x', 'y', 'z')))
        expect(quotient.dimension).to(equal(2))

    def test_weighted_variables(self):
        weighted = parse_ring('QQ[x:1,y:2]')

        expect(weighted.weights).to(equal((1, 2)))
        expect(weighted('y').degree()).to(equal(2))
        expect(str(weighted)).to(equal('QQ[x:1,y:2]'))

    def test_rejects_inhomogeneous_quotients(self):
        expect(lambda: parse_ring('QQ[x,y]/(x^2 + y)')).to(raise_error(InhomogeneousError))

    def test_rejects_malformed_rings(self):
        expect(lambda: parse_ring('QQ(x,y)')).to(raise_error(ParseError))
        expect(lambda: parse_ring('QQ[x,x]')).to(raise_error(ParseError))

    def test_dimension_of_monomial_quotients(self):
        expect(combinatorial_dimension([(1, 1, 0), (1, 0, 1)], 3)).to(equal(2))
        expect(combinatorial_dimension([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)).to(equal(0))
        expect(combinatorial_dimension([(0, 0, 0)], 3)).to(equal(-1))


class TestFields:
    """Rationals and prime fields."""

    def test_prime_field_arithmetic(self):
        ring = parse_ring('F5[x,y]')

        expect(str(ring('6x + 10y'))).to(equal('x'))
        expect(str(ring('x/2'))).to(equal('3*x'))

    def test_field_tags(self):
        expect(CoefficientField.from_tag('GF(7)').characteristic).to(equal(7))
        expect(CoefficientField.from_tag('ZZ/3').tag).to(equal('F3'))
        expect(CoefficientField.from_tag('Q').tag).to(equal('QQ'))

    def test_rejects_composite_characteristic(self):
        expect(lambda: CoefficientField.from_tag('F4')).to(raise_error(ParseError))

    def test_rejects_denominators_divisible_by_the_characteristic(self):
        ring = parse_ring('F5[x]')

        expect(lambda: parse_polynomial(ring, 'x/5')).to(raise_error(ParseError))


class TestArithmetic:
    """Sparse polynomial operations."""

    def test_sums_and_products(self, ring):
        x, y, _ = ring.gens

        expect((x + y) * (x - y)).to(equal(ring('x^2 - y^2')))
        expect(((x + y) ** 2).degree()).to(equal(2))

    def test_homogeneity(self, ring):
        expect(ring('x^2 + yz').homogeneous_degree()).to(equal(2))
        expect(ring('x^2 + y').is_homogeneous()).to(be_false)
        expect(lambda: ring('x^2 + y').homogeneous_degree()).to(raise_error(InhomogeneousError))

    def test_mixing_rings_is_a_usage_error(self, ring):
        other = parse_ring('QQ[a,b]')

        expect(lambda: ring('x') + other('a')).to(raise_error(UsageError))

    def test_leading_term_under_degrevlex(self, ring):
        polynomial = ring('z^3 + x^2*y')

        expect(polynomial.leading_monomial).to(equal((2, 1, 0)))

    def test_monomial_constructor(self, ring):
        expect(Polynomial.monomial(ring, (1, 0, 2))).to(equal(ring('xz^2')))

    def test_squares_in_characteristic_two(self):
        ring = parse_ring('F2[x,y,z]')

        expect(ring('x + y + z') * ring('x + y + z')).to(equal(ring('x^2 + y^2 + z^2')))

    def test_homogeneity_check(self, ring):
        expect(homogeneity_check(ring('xy - z^2'))).to(equal(2))
        expect(homogeneity_check(ring('0'))).to(equal(ANY_DEGREE))
        expect(lambda: homogeneity_check(ring('x - 1'))).to(raise_error(InhomogeneousError))


class TestDivision:
    """Division with remainder by a list of divisors."""

    def test_quotients_and_remainder(self, ring):
        dividend = ring('x^2y + xy^2 + y^2')
        divisors = [ring('xy - 1'), ring('y^2 - 1')]

        quotients, remainder = divide_with_remainder(dividend, divisors)

        expect(quotients).to(equal([ring('x + y'), ring('1')]))
        expect(remainder).to(equal(ring('x + y + 1')))

    def test_division_identity(self, ring):
        dividend = ring('x^3 + y^2z - z^3')
        divisors = [ring('x^2 - yz'), ring('xz')]

        quotients, remainder = divide_with_remainder(dividend, divisors)
        total = remainder
        for quotient, divisor in zip(quotients, divisors):
            total = total + quotient * divisor

        expect(total).to(equal(dividend))

    def test_exact_division_leaves_no_remainder(self, ring):
        _, remainder = divide_with_remainder(ring('x^2y - y^3'), [ring('x - y')])

        expect(remainder.is_zero()).to(be_true)

    def test_rejects_zero_divisors(self, ring):
        expect(lambda: divide_with_remainder(ring('x^2'), [ring('x'), ring('0')])).to(raise_error(UsageError))

    def test_rejects_divisors_from_another_ring(self, ring):
        other = parse_ring('QQ[a,b]')

        expect(lambda: divide_with_remainder(ring('x^2'), [other('a')])).to(raise_error(UsageError))


SEEDS = (0, 1, 2, 3)
TRIALS = 12


def _random_polynomial(ring, rng, terms=4, max_exponent=3):
    coefficients = {}
    for _ in range(int(rng.integers(1, terms + 1))):
        exponents = tuple(int(e) for e in rng.integers(0, max_exponent + 1, size=ring.ngens))
        coefficients[exponents] = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5)))
    return Polynomial(ring, coefficients)


def _random_monomial(rng, size=3, max_exponent=3):
    return tuple(int(e) for e in rng.integers(0, max_exponent + 1, size=size))


@pytest.fixture(name='any_ring', params=['QQ[x,y,z]', 'F7[x,y,z]', 'QQ[x:1,y:2,z:3]'])
def fixture_any_ring(request):
    return parse_ring(request.param)


class TestRandomizedArithmetic:
    """Ring laws, division and text round trips on seeded random polynomials."""

    @pytest.mark.parametrize('seed', SEEDS)
    def test_ring_axioms(self, any_ring, seed):
        rng = np.random.default_rng(seed)
        zero, one = Polynomial(any_ring, {}), Polynomial.constant(any_ring, 1)

        for _ in range(TRIALS):
            a, b, c = (_random_polynomial(any_ring, rng) for _ in range(3))

            expect((a + b) + c).to(equal(a + (b + c)))
            expect(a + b).to(equal(b + a))
            expect((a * b) * c).to(equal(a * (b * c)))
            expect(a * b).to(equal(b * a))
            expect(a * (b + c)).to(equal(a * b + a * c))
            expect(a + zero).to(equal(a))
            expect(a * one).to(equal(a))
            expect((a - a).is_zero()).to(be_true)
            expect(a ** 2).to(equal(a * a))

    @pytest.mark.parametrize('seed', SEEDS)
    def test_division_invariant(self, any_ring, seed):
        rng = np.random.default_rng(seed)

        for _ in range(TRIALS):
            dividend = _random_polynomial(any_ring, rng, terms=6)
            divisors = [_random_polynomial(any_ring, rng, terms=2, max_exponent=2) for _ in range(2)]
            divisors = [d for d in divisors if d] or [any_ring('x')]

            quotients, remainder = divide_with_remainder(dividend, divisors)
            total = remainder
            for quotient, divisor in zip(quotients, divisors):
                total = total + quotient * divisor

            expect(total).to(equal(dividend))
            for monomial in remainder.monomials():
                expect(any(monomial_divides(d.leading_monomial, monomial) for d in divisors)).to(be_false)

    @pytest.mark.parametrize('seed', SEEDS)
    def test_printer_round_trip(self, any_ring, seed):
        rng = np.random.default_rng(seed)

        for _ in range(TRIALS):
            polynomial = _random_polynomial(any_ring, rng)
            text = str(polynomial)
            parsed = parse_polynomial(any_ring, text)

            expect(parsed).to(equal(polynomial))
            expect(str(parsed)).to(equal(text))


class TestMonomialOrders:
    """Total, multiplicative orders refining the (block) weighted degree."""

    @pytest.mark.parametrize('kind', ['degrevlex', 'deglex', 'elimination'])
    @pytest.mark.parametrize('weights', [(1, 1, 1), (1, 2, 3)])
    def test_order_laws(self, kind, weights):
        order = MonomialOrder(kind, weights, block=1)
        rng = np.random.default_rng(len(kind) + sum(weights))

        for _ in range(5 * TRIALS):
            a, b, c = (_random_monomial(rng) for _ in range(3))

            expect(order.compare(a, b)).to(equal(-order.compare(b, a)))
            expect(order.compare(a, b) == 0).to(equal(a == b))
            expect(order.compare(monomial_mul(a, c), monomial_mul(b, c))).to(equal(order.compare(a, b)))
            if any(c):
                expect(order.compare(monomial_mul(a, c), a)).to(equal(1))
            if order.compare(a, b) > 0 and order.compare(b, c) > 0:
                expect(order.compare(a, c)).to(equal(1))

            first = (weighted_degree(a[:1], weights), order.degree(a)) if kind == 'elimination' else order.degree(a)
            second = (weighted_degree(b[:1], weights), order.degree(b)) if kind == 'elimination' else order.degree(b)
            if first > second:
                expect(order.compare(a, b)).to(equal(1))

    def test_weighted_leading_term(self):
        ring = parse_ring('QQ[x:1,y:2,z:3]')

        expect(ring('x^3 + xy + z').leading_monomial).to(equal((3, 0, 0)))
        expect(ring.order.degree((0, 0, 1))).to(equal(3))
