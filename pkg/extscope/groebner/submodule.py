"""Graded submodules of free modules over R and their Groebner bases."""

import threading
from typing import List, Optional, Sequence, Tuple

from extscope.errors import InhomogeneousError, IntegrityError, UsageError
from extscope.groebner.buchberger import Buchberger, Element, Vector
from extscope.poly.order import Monomial
from extscope.poly.polynomial import ANY_DEGREE, Polynomial
from extscope.poly.ring import RingSpec

Column = Tuple[Polynomial, ...]


def column_degree(column: Sequence[Polynomial], twists: Sequence[int]) -> Optional[int]:
    """Degree of a homogeneous column of R^n(-twists): ``deg entry_i + twists_i`` for every nonzero entry.

    None for the zero column.

    :raise InhomogeneousError: when entries are inhomogeneous or their degrees do not agree
    """

    degree = None
    for entry, twist in zip(column, twists):
        entry_degree = entry.homogeneous_degree()
        if entry_degree == ANY_DEGREE:
            continue
        current = entry_degree + twist
        if degree is None:
            degree = current
        elif degree != current:
            raise InhomogeneousError(f"column {[str(e) for e in column]} mixes degrees {degree} and {current}",
                                     (degree, current))
    return degree


class GroebnerBasis:
    """Reduced Groebner basis in S of the lift of a submodule of R^n: its generators plus J e_i.

    :param ring: Ring R
    :param twists: Generator degrees of the ambient free module
    :param columns: Generators of the submodule
    """

    def __init__(self, ring: RingSpec, twists: Sequence[int], columns: Sequence[Sequence[Polynomial]]):
        self.ring = ring
        self.twists = tuple(twists)
        self.engine = Buchberger(ring, self.twists)
        vectors = [self.engine.to_vector(column) for column in columns]
        for generator in ring.quotient_basis:
            polynomial = self.engine.to_columns(generator.terms, 1)[0]
            for component in range(len(self.twists)):
                vectors.append({(component, m): c for m, c in polynomial.as_dict().items()})
        self.elements: List[Element] = self.engine.compute(vectors)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def reduce_vector(self, vector: Vector) -> Vector:
        return self.engine.reduce(vector, self.elements)

    def reduce(self, column: Sequence[Polynomial]) -> Column:
        """Normal form of a column; it is also reduced modulo J."""
        return tuple(self.engine.to_columns(self.reduce_vector(self.engine.to_vector(column)), self.rank))

    def contains(self, column: Sequence[Polynomial]) -> bool:
        return not self.reduce_vector(self.engine.to_vector(column))

    def columns(self) -> List[Column]:
        """Basis elements as columns, reduced modulo J, dropping those that vanish in R."""

        result = []
        for element in self.elements:
            column = tuple(self.ring.reduce(e) for e in self.engine.to_columns(element.terms, self.rank))
            if any(column):
                result.append(column)
        return result

    def leading_monomials(self) -> List[List[Monomial]]:
        """Leading monomials per component: the lead-term module of the lift."""

        leads: List[List[Monomial]] = [[] for _ in range(self.rank)]
        for element in self.elements:
            component, monomial = element.lead
            leads[component].append(monomial)
        return leads


class SubmoduleOfFree:
    """Submodule of the graded free module R^n(-twists) given by generator columns.

    Generators are reduced modulo J; ``degrees`` records one degree per generator, which
    matters for zero generators and is otherwise read from the entries.

    :param ring: Ring R
    :param twists: Generator degrees of the ambient free module
    :param generators: Columns of length ``len(twists)``
    :param degrees: Optional generator degrees
    """

    def __init__(
        self,
        ring: RingSpec,
        twists: Sequence[int],
        generators: Sequence[Sequence[Polynomial]],
        degrees: Optional[Sequence[Optional[int]]] = None
    ):
        self.__ring = ring
        self.__twists = tuple(twists)
        self.__generators: List[Column] = []
        self.__degrees: List[int] = []
        self.__basis: Optional[GroebnerBasis] = None
        self.__lock = threading.Lock()

        if degrees is not None and len(degrees) != len(generators):
            raise UsageError("one degree per generator is needed")

        for index, column in enumerate(generators):
            column = tuple(column)
            if len(column) != len(self.__twists):
                raise UsageError(f"generator of length {len(column)} in a free module of rank {len(self.__twists)}")
            column = tuple(ring.reduce(entry) for entry in column)
            degree = column_degree(column, self.__twists)
            given = degrees[index] if degrees is not None else None
            if degree is not None and given is not None and degree != given:
                raise InhomogeneousError(f"generator {index} has degree {degree}, not {given}", (degree, given))
            self.__generators.append(column)
            self.__degrees.append(degree if degree is not None else (given if given is not None else 0))

    @property
    def ring(self) -> RingSpec:
        return self.__ring

    @property
    def twists(self) -> Tuple[int, ...]:
        return self.__twists

    @property
    def rank(self) -> int:
        return len(self.__twists)

    @property
    def generators(self) -> List[Column]:
        return list(self.__generators)

    @property
    def degrees(self) -> List[int]:
        return list(self.__degrees)

    def __len__(self) -> int:
        return len(self.__generators)

    def nonzero(self) -> 'SubmoduleOfFree':
        """Same submodule without the zero generators."""

        keep = [i for i, column in enumerate(self.__generators) if any(column)]
        return SubmoduleOfFree(
            self.__ring, self.__twists, [self.__generators[i] for i in keep], [self.__degrees[i] for i in keep]
        )

    def groebner(self) -> GroebnerBasis:
        """Cached Groebner basis; computed once even when several threads ask."""

        with self.__lock:
            if self.__basis is None:
                self.__basis = GroebnerBasis(self.__ring, self.__twists, self.__generators)
                for column in self.__generators:
                    if not self.__basis.contains(column):
                        raise IntegrityError("Groebner basis does not reduce its own generators to zero")
            return self.__basis

    def contains(self, column: Sequence[Polynomial]) -> bool:
        return self.groebner().contains(tuple(self.__ring.reduce(e) for e in column))

    def contains_module(self, other: 'SubmoduleOfFree') -> bool:
        return all(self.contains(column) for column in other.generators)

    def equals(self, other: 'SubmoduleOfFree') -> bool:
        return self.contains_module(other) and other.contains_module(self)

    def __str__(self) -> str:
        columns = ', '.join('(' + ', '.join(str(e) for e in column) + ')' for column in self.__generators)
        return f"<{columns}>"

    def to_json(self) -> list:
        return [[str(e) for e in column] for column in self.__generators]
