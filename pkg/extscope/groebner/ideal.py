"""Homogeneous ideals of a graded ring R."""

from typing import List, Sequence

from extscope.groebner.submodule import GroebnerBasis, SubmoduleOfFree
from extscope.poly.order import Monomial
from extscope.poly.polynomial import Polynomial
from extscope.poly.ring import RingSpec


class Ideal:
    """Ideal of R given by homogeneous generators.

    Generators are kept in normal form modulo J, zeros removed. The Groebner basis of the lift
    ``I + J`` to S is computed on first use and cached.

    :param ring: Ring R
    :param generators: Polynomials or texts parsed in ``ring``
    """

    def __init__(self, ring: RingSpec, generators: Sequence = ()):
        polynomials = []
        for generator in generators:
            if isinstance(generator, str):
                generator = ring(generator)
            else:
                generator = ring.reduce(generator)
            if generator:
                polynomials.append(generator)

        self.__ring = ring
        self.__generators = polynomials
        self.__module = SubmoduleOfFree(ring, (0,), [(g,) for g in polynomials])

    @classmethod
    def unit(cls, ring: RingSpec) -> 'Ideal':
        return cls(ring, [ring.one])

    @classmethod
    def zero(cls, ring: RingSpec) -> 'Ideal':
        return cls(ring, [])

    @classmethod
    def maximal(cls, ring: RingSpec) -> 'Ideal':
        """The homogeneous maximal ideal generated by the variables."""
        return cls(ring, ring.gens)

    @property
    def ring(self) -> RingSpec:
        return self.__ring

    @property
    def generators(self) -> List[Polynomial]:
        return list(self.__generators)

    @property
    def module(self) -> SubmoduleOfFree:
        """The ideal as a submodule of R^1."""
        return self.__module

    def groebner(self) -> GroebnerBasis:
        return self.__module.groebner()

    def groebner_basis(self) -> List[Polynomial]:
        """Reduced Groebner basis of I + J in S."""

        basis = self.groebner()
        return [basis.engine.to_columns(e.terms, 1)[0] for e in basis.elements]

    def leading_monomials(self) -> List[Monomial]:
        """Leading monomials of the basis of I + J."""
        return self.groebner().leading_monomials()[0]

    def reduce(self, polynomial: Polynomial) -> Polynomial:
        return self.groebner().reduce((polynomial,))[0]

    def contains(self, polynomial) -> bool:
        if isinstance(polynomial, str):
            polynomial = self.__ring(polynomial)
        return not self.reduce(polynomial)

    def __contains__(self, polynomial) -> bool:
        return self.contains(polynomial)

    def is_zero(self) -> bool:
        return not self.__generators

    def is_unit(self) -> bool:
        return any(e.lead[1] == (0,) * self.__ring.ngens for e in self.groebner().elements)

    def is_monomial(self) -> bool:
        """Whether I + J is generated by monomials, read from its reduced Groebner basis."""
        return all(len(e.terms) == 1 for e in self.groebner().elements)

    def contains_ideal(self, other: 'Ideal') -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: 'Ideal') -> bool:
        """Equality as ideals of R."""
        return self.contains_ideal(other) and other.contains_ideal(self)

    def __add__(self, other: 'Ideal') -> 'Ideal':
        from extscope.groebner.operations import ideal_ops  # pylint: disable=import-outside-toplevel
        return ideal_ops(self, other, 'sum')

    def __mul__(self, other: 'Ideal') -> 'Ideal':
        from extscope.groebner.operations import ideal_ops  # pylint: disable=import-outside-toplevel
        return ideal_ops(self, other, 'product')

    def intersect(self, other: 'Ideal') -> 'Ideal':
        from extscope.groebner.operations import ideal_ops  # pylint: disable=import-outside-toplevel
        return ideal_ops(self, other, 'intersection')

    def quotient(self, other) -> 'Ideal':
        """``(self : other)`` for an ideal or a single polynomial."""

        from extscope.groebner.operations import ideal_quotient  # pylint: disable=import-outside-toplevel
        return ideal_quotient(self, other)

    def power(self, exponent: int) -> 'Ideal':
        result = Ideal.unit(self.__ring)
        for _ in range(exponent):
            result = result * self
        return result

    def minimal_generators(self) -> 'Ideal':
        """Same ideal with a minimal homogeneous generating set."""

        from extscope.groebner.operations import minimal_generators  # pylint: disable=import-outside-toplevel
        return Ideal(self.__ring, [column[0] for column in minimal_generators(self.__module).generators])

    def mu(self) -> int:
        """Minimal number of generators."""
        return len(self.minimal_generators().generators)

    def radical_contains(self, polynomial) -> bool:
        from extscope.groebner.operations import radical_membership  # pylint: disable=import-outside-toplevel
        if isinstance(polynomial, str):
            polynomial = self.__ring(polynomial)
        return radical_membership(polynomial, self)

    def radical_equals(self, other: 'Ideal') -> bool:
        from extscope.groebner.operations import radical_ideal_equal  # pylint: disable=import-outside-toplevel
        return radical_ideal_equal(self, other)

    def in_ring(self, ring: RingSpec) -> 'Ideal':
        """Same generators read in another ring over the same S (for example S itself)."""
        return Ideal(ring, self.__generators)

    def __str__(self) -> str:
        return '(' + ', '.join(str(g) for g in self.__generators) + ')'

    def __repr__(self) -> str:
        return f"Ideal{str(self)}"

    def to_json(self) -> List[str]:
        return [str(g) for g in self.__generators]
