"""Buchberger's algorithm for graded submodules of a free module over a polynomial ring.

Vectors are sparse dictionaries ``{(component, monomial): coefficient}``. Components are compared
position-over-term: a smaller component index is larger, then the ring's monomial order decides.
Ideals are the rank-one case. Pairs are selected by the normal strategy (lowest degree first)
and pruned with the Gebauer-Moeller criteria.
"""

import heapq
from logging import DEBUG
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul

from extscope.config import Settings
from extscope.errors import DegreeCapExceeded
from extscope.logger import LOGGER
from extscope.poly.order import Monomial
from extscope.poly.polynomial import Polynomial
from extscope.poly.ring import RingSpec

Term = Tuple[int, Monomial]
Vector = Dict[Term, Any]


@dataclass
class Element:
    """Monic basis vector with its leading term cached."""

    terms: Vector
    lead: Term


class Buchberger:
    """Groebner engine over the polynomial ring ``ring`` for submodules of the free module with generator
    degrees ``twists``.

    :param ring: Polynomial ring doing the arithmetic (its quotient ideal is ignored)
    :param twists: Degrees of the basis vectors of the ambient free module
    :param degree_cap: Highest polynomial degree of an S-pair lcm; None reads the ring or the settings
    :param product_criterion: Skip pairs with coprime leading terms (only sound for ideals)
    """

    def __init__(
        self,
        ring: RingSpec,
        twists: Sequence[int],
        degree_cap: Optional[int] = None,
        product_criterion: Optional[bool] = None
    ):
        self.ring = ring.ambient
        self.order = self.ring.order
        self.field = self.ring.field
        self.twists = tuple(twists)
        self.rank = len(self.twists)
        if degree_cap is None:
            degree_cap = ring.degree_cap if ring.degree_cap is not None else Settings().degree_cap
        self.degree_cap = degree_cap
        self.product_criterion = self.rank == 1 if product_criterion is None else product_criterion
        self._keys: Dict[Term, tuple] = {}

    def key(self, term: Term) -> tuple:
        """Position-over-term sort key."""

        key = self._keys.get(term)
        if key is None:
            key = (-term[0], self.order.key(term[1]))
            self._keys[term] = key
        return key

    def lead(self, vector: Vector) -> Term:
        return max(vector, key=self.key)

    def to_vector(self, column: Sequence[Polynomial]) -> Vector:
        """Dictionary form of a column of polynomials."""

        vector = {}
        for component, entry in enumerate(column):
            for monomial, coefficient in entry.as_dict().items():
                vector[(component, monomial)] = coefficient
        return vector

    def to_columns(self, vector: Vector, rank: int, offset: int = 0) -> List[Polynomial]:
        """Column of polynomials from components ``offset .. offset + rank - 1`` of ``vector``."""

        entries: List[Dict[Monomial, Any]] = [{} for _ in range(rank)]
        for (component, monomial), coefficient in vector.items():
            index = component - offset
            if 0 <= index < rank:
                entries[index][monomial] = coefficient
        return [Polynomial(self.ring, entry, trusted=True) for entry in entries]

    def element(self, vector: Vector) -> Element:
        """Monic element of a nonzero vector."""

        lead = self.lead(vector)
        inverse = self.field.one / vector[lead]
        return Element({t: c * inverse for t, c in vector.items()}, lead)

    @staticmethod
    def shift(vector: Vector, monomial: Monomial, coefficient: Any) -> Vector:
        """``coefficient * monomial * vector``."""
        return {(t[0], monomial_mul(t[1], monomial)): c * coefficient for t, c in vector.items()}

    @staticmethod
    def axpy(target: Vector, vector: Vector, monomial: Monomial, coefficient: Any) -> None:
        """``target += coefficient * monomial * vector`` in place."""

        for (component, m), c in vector.items():
            term = (component, monomial_mul(m, monomial))
            value = target.get(term)
            value = c * coefficient if value is None else value + c * coefficient
            if value:
                target[term] = value
            else:
                del target[term]

    def spoly(self, f: Element, g: Element, lcm: Monomial) -> Vector:
        """S-vector of two monic elements with leading terms in the same component."""

        vector = self.shift(f.terms, monomial_div(lcm, f.lead[1]), self.field.one)
        self.axpy(vector, g.terms, monomial_div(lcm, g.lead[1]), -self.field.one)
        return vector

    @staticmethod
    def _reducer(term: Term, index: Dict[int, List[Element]]) -> Optional[Element]:
        for candidate in index.get(term[0], ()):
            if monomial_divides(candidate.lead[1], term[1]):
                return candidate
        return None

    def reduce(self, vector: Vector, basis: Sequence[Element]) -> Vector:
        """Full normal form of ``vector`` modulo ``basis``; the result has no term divisible by a leading term."""

        index: Dict[int, List[Element]] = {}
        for element in basis:
            index.setdefault(element.lead[0], []).append(element)
        return self._reduce(dict(vector), index)

    def _reduce(self, vector: Vector, index: Dict[int, List[Element]]) -> Vector:
        remainder: Vector = {}
        while vector:
            term = self.lead(vector)
            reducer = self._reducer(term, index)
            if reducer is None:
                remainder[term] = vector.pop(term)
                continue
            self.axpy(vector, reducer.terms, monomial_div(term[1], reducer.lead[1]), -vector[term])
        return remainder

    def _pair_degree(self, lcm: Term) -> int:
        return self.order.degree(lcm[1]) + self.twists[lcm[0]]

    def select(self, heap: list, alive: Set[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
        """Pop the live pair of lowest degree (then lowest lcm) from the heap."""

        while heap:
            _, _, i, j = heapq.heappop(heap)
            if (i, j) in alive:
                alive.discard((i, j))
                return i, j
        return None

    def update(
        self,
        basis: List[Element],
        by_component: Dict[int, List[int]],
        pairs: Dict[Tuple[int, int], Monomial],
        alive: Set[Tuple[int, int]],
        heap: list,
        new: Element,
    ) -> None:
        """Add ``new`` to the basis and its surviving pairs to the queue (Gebauer-Moeller)."""

        k = len(basis)
        component, lead = new.lead

        for pair in list(alive):
            lcm = pairs[pair]
            i, j = pair
            if basis[i].lead[0] != component or not monomial_divides(lead, lcm):
                continue
            if monomial_lcm(basis[i].lead[1], lead) != lcm and monomial_lcm(basis[j].lead[1], lead) != lcm:
                alive.discard(pair)

        candidates: Dict[Monomial, List[int]] = {}
        for i in by_component.get(component, ()):
            candidates.setdefault(monomial_lcm(basis[i].lead[1], lead), []).append(i)

        minimal: List[Monomial] = []
        for lcm in sorted(candidates, key=self.order.key):
            if all(not monomial_divides(other, lcm) for other in minimal):
                minimal.append(lcm)

        for lcm in minimal:
            owners = candidates[lcm]
            if self.product_criterion and any(monomial_mul(basis[i].lead[1], lead) == lcm for i in owners):
                continue
            pair = (min(owners), k)
            pairs[pair] = lcm
            alive.add(pair)
            term = (component, lcm)
            heapq.heappush(heap, (self._pair_degree(term), self.key(term), pair[0], pair[1]))

        basis.append(new)
        by_component.setdefault(component, []).append(k)

    def minimalize(self, basis: Sequence[Element]) -> List[Element]:
        """Drop elements whose leading term is divisible by the leading term of another one."""

        kept: List[Element] = []
        for element in sorted(basis, key=lambda e: self.key(e.lead)):
            component, lead = element.lead
            if all(other.lead[0] != component or not monomial_divides(other.lead[1], lead) for other in kept):
                kept.append(element)
        return kept

    def interreduce(self, basis: Sequence[Element]) -> List[Element]:
        """Reduced basis from a minimal one: every tail is in normal form."""

        reduced = []
        for position, element in enumerate(basis):
            others = [e for index, e in enumerate(basis) if index != position]
            reduced.append(self.element(self.reduce(element.terms, others)))
        return sorted(reduced, key=lambda e: self.key(e.lead))

    def compute(self, vectors: Sequence[Vector]) -> List[Element]:
        """Reduced Groebner basis of the submodule generated by ``vectors``, sorted by increasing leading term.

        :raise DegreeCapExceeded: when a needed S-pair lcm has degree above the cap
        """

        basis: List[Element] = []
        by_component: Dict[int, List[int]] = {}
        index: Dict[int, List[Element]] = {}
        pairs: Dict[Tuple[int, int], Monomial] = {}
        alive: Set[Tuple[int, int]] = set()
        heap: list = []

        def add(vector: Vector) -> None:
            element = self.element(vector)
            self.update(basis, by_component, pairs, alive, heap, element)
            index.setdefault(element.lead[0], []).append(element)

        generators = [dict(v) for v in vectors if v]
        generators.sort(key=lambda v: self._pair_degree(self.lead(v)))
        for vector in generators:
            vector = self._reduce(vector, index)
            if vector:
                add(vector)

        processed = 0
        while True:
            pair = self.select(heap, alive)
            if pair is None:
                break
            i, j = pair
            lcm = pairs[pair]
            degree = self.order.degree(lcm)
            if degree > self.degree_cap:
                raise DegreeCapExceeded(self.degree_cap, degree)
            processed += 1
            vector = self._reduce(self.spoly(basis[i], basis[j], lcm), index)
            if vector:
                add(vector)

        result = self.interreduce(self.minimalize(basis))

        if LOGGER.is_enabled_for(DEBUG):
            LOGGER.fields({'pairs': processed, 'size': len(result), 'rank': self.rank}).debug('groebner basis computed')

        return result
