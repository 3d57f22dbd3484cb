"""Graded rings: a polynomial ring S over a field, optionally divided by a homogeneous ideal J."""

import re
from dataclasses import dataclass, replace
from dataclasses import field as dataclass_field
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple

from extscope.errors import InhomogeneousError, UsageError
from extscope.poly.field import CoefficientField
from extscope.poly.order import ORDERS, MonomialOrder
from extscope.poly.polynomial import Polynomial

if TYPE_CHECKING:
    from extscope.groebner.buchberger import Buchberger, Element

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class RingSpec:
    """Specification of R = S/J with S = field[variables] graded by positive ``weights``.

    ``quotient_ideal`` holds the generators of J as polynomials of S; the empty tuple gives R = S.
    ``degree_cap`` bounds every Groebner computation over the ring (None reads the settings) and
    does not take part in ring equality.
    """

    variables: Tuple[str, ...]
    field: CoefficientField = CoefficientField()
    weights: Tuple[int, ...] = ()
    quotient_ideal: Tuple[Polynomial, ...] = ()
    order_kind: str = 'degrevlex'
    block: int = 0
    degree_cap: Optional[int] = dataclass_field(default=None, compare=False, hash=False)

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, 'variables', variables)

        if not variables:
            raise UsageError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise UsageError(f"duplicate variable names in {variables}")
        for name in variables:
            if not _NAME.match(name):
                raise UsageError(f"invalid variable name {name!r}")

        weights = tuple(self.weights) if self.weights else (1,) * len(variables)
        if len(weights) != len(variables) or any(w <= 0 for w in weights):
            raise UsageError(f"weights {weights} must be positive, one per variable")
        object.__setattr__(self, 'weights', weights)

        if self.order_kind not in ORDERS:
            raise UsageError(f"unknown monomial order {self.order_kind!r}")

        quotient = tuple(g for g in self.quotient_ideal if g)
        ambient = self.ambient
        for generator in quotient:
            if generator.ring != ambient:
                raise UsageError(f"quotient generator {generator} does not belong to {ambient}")
            try:
                generator.homogeneous_degree()
            except InhomogeneousError as error:
                raise InhomogeneousError(f"quotient ideal must be homogeneous: {error}", error.degrees) from error
        object.__setattr__(self, 'quotient_ideal', quotient)

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @cached_property
    def order(self) -> MonomialOrder:
        return MonomialOrder(self.order_kind, self.weights, self.block)

    @cached_property
    def ambient(self) -> 'RingSpec':
        """S itself: same variables, field, weights and order, no quotient."""

        if not self.quotient_ideal:
            return self
        return RingSpec(self.variables, self.field, self.weights, (), self.order_kind, self.block, self.degree_cap)

    @property
    def is_polynomial_ring(self) -> bool:
        return not self.quotient_ideal

    @property
    def gens(self) -> List[Polynomial]:
        """The variables as polynomials."""

        n = self.ngens
        return [Polynomial(self, {tuple(int(i == j) for j in range(n)): 1}) for i in range(n)]

    def variable(self, name: str) -> Polynomial:
        for candidate, generator in zip(self.variables, self.gens):
            if candidate == name:
                return generator
        raise UsageError(f"{name!r} is not a variable of {self}")

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return Polynomial.constant(self, 1)

    def constant(self, value) -> Polynomial:
        return Polynomial.constant(self, value)

    def __call__(self, text: str) -> Polynomial:
        """Parse ``text`` and return its normal form in this ring."""

        from extscope.poly.parser import parse_polynomial  # pylint: disable=import-outside-toplevel
        return self.reduce(parse_polynomial(self, text))

    @cached_property
    def quotient_engine(self) -> 'Buchberger':
        from extscope.groebner.buchberger import Buchberger  # pylint: disable=import-outside-toplevel
        return Buchberger(self.ambient, (0,), self.degree_cap)

    @cached_property
    def quotient_basis(self) -> List['Element']:
        """Reduced Groebner basis of J in S, as engine elements."""

        engine = self.quotient_engine
        return engine.compute([engine.to_vector([g]) for g in self.quotient_ideal])

    @property
    def quotient_groebner(self) -> List[Polynomial]:
        """Reduced Groebner basis of J as polynomials."""
        return [self.quotient_engine.to_columns(e.terms, 1)[0] for e in self.quotient_basis]

    def reduce(self, polynomial: Polynomial) -> Polynomial:
        """Canonical representative of ``polynomial`` modulo J."""

        if polynomial.ring != self.ambient:
            raise UsageError(f"{polynomial} does not belong to {self}")
        if not self.quotient_ideal or not polynomial:
            return polynomial

        engine = self.quotient_engine
        reduced = engine.reduce(engine.to_vector([polynomial]), self.quotient_basis)
        return engine.to_columns(reduced, 1)[0]

    @cached_property
    def dimension(self) -> int:
        """Krull dimension of R, read from the leading monomials of J."""

        leads = [e.lead[1] for e in self.quotient_basis]
        return combinatorial_dimension(leads, self.ngens)

    def with_order(self, order_kind: str, block: int = 0) -> 'RingSpec':
        """The same ring under another monomial order."""

        target = replace(self.ambient, order_kind=order_kind, block=block)
        return replace(
            self, order_kind=order_kind, block=block, quotient_ideal=tuple(g.embed(target) for g in self.quotient_ideal)
        )

    def with_tags(self, names: Sequence[str]) -> 'RingSpec':
        """S with extra degree-one variables placed first and eliminated first.

        Used for intersections and radical membership; the quotient ideal is not carried over.
        """

        names = tuple(names)
        taken = set(self.variables)
        fresh = []
        for name in names:
            while name in taken:
                name = name + '_'
            taken.add(name)
            fresh.append(name)

        return RingSpec(
            tuple(fresh) + self.variables,
            self.field,
            (1,) * len(fresh) + self.weights,
            (),
            'elimination',
            len(fresh),
            self.degree_cap,
        )

    def quotient(self, generators: Sequence[Polynomial]) -> 'RingSpec':
        """R/(generators), as a ring over the same S."""

        extra = tuple(g if g.ring == self.ambient else g.embed(self.ambient) for g in generators)
        return replace(self, quotient_ideal=self.quotient_ideal + extra)

    def __str__(self) -> str:
        names = ','.join(self.variables)
        if any(w != 1 for w in self.weights):
            names = ','.join(f"{v}:{w}" for v, w in zip(self.variables, self.weights))
        text = f"{self.field.tag}[{names}]"
        if self.quotient_ideal:
            text += '/(' + ', '.join(str(g) for g in self.quotient_ideal) + ')'
        return text

    def to_json(self) -> str:
        return str(self)


def combinatorial_dimension(leads: Sequence[Tuple[int, ...]], ngens: int) -> int:
    """Dimension of S/L for the monomial ideal L generated by ``leads``: the size of the largest set of
    variables containing the support of no generator. -1 when L is the unit ideal.
    """

    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]

    if any(not support for support in supports):
        return -1

    for size in range(ngens, -1, -1):
        for chosen in combinations(range(ngens), size):
            chosen = frozenset(chosen)
            if all(not support <= chosen for support in supports):
                return size

    return 0
