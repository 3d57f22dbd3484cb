"""Ideal and submodule operations built on the Groebner engine: syzygies, colons, intersections,
radical membership and minimal generators.

Everything works over R = S/J by computing in S with J added to the generators.
"""

from logging import DEBUG
from typing import List, Optional, Sequence, Tuple, Union

from extscope.errors import UsageError
from extscope.groebner.buchberger import Buchberger, Term, Vector
from extscope.groebner.ideal import Ideal
from extscope.groebner.submodule import Column, GroebnerBasis, SubmoduleOfFree
from extscope.logger import LOGGER
from extscope.poly.polynomial import Polynomial
from extscope.poly.ring import RingSpec


def groebner_basis(target: Union[Ideal, SubmoduleOfFree]) -> GroebnerBasis:
    """Reduced Groebner basis of the lift of ``target`` to S."""
    return target.groebner()


def normal_form(element: Union[Polynomial, Sequence[Polynomial]], basis: GroebnerBasis) -> Union[Polynomial, Column]:
    """Unique remainder of a polynomial (rank one) or a column modulo a Groebner basis."""

    if isinstance(element, Polynomial):
        return basis.reduce((element,))[0]
    return basis.reduce(tuple(element))


def _quotient_polynomials(ring: RingSpec) -> List[Polynomial]:
    return ring.quotient_groebner if ring.quotient_ideal else []


def syzygies(target: Union[Ideal, SubmoduleOfFree]) -> SubmoduleOfFree:
    """Generators of the module of relations among the generators of ``target``, over R.

    Computed as an elimination: each generator g_j is extended by the unit vector e_j, J e_i is added,
    and the basis elements with zero first block are the relations. The result lives in
    R^m(-degrees of the generators).
    """

    module = target.module if isinstance(target, Ideal) else target
    ring = module.ring
    n, m = module.rank, len(module)
    degrees = module.degrees

    if m == 0:
        return SubmoduleOfFree(ring, (), [])

    engine = Buchberger(ring, tuple(module.twists) + tuple(degrees))
    one = ring.field.one
    constant = (0,) * ring.ngens

    vectors: List[Vector] = []
    for j, column in enumerate(module.generators):
        vector = engine.to_vector(column)
        vector[(n + j, constant)] = one
        vectors.append(vector)
    for generator in _quotient_polynomials(ring):
        for i in range(n):
            vectors.append({(i, mono): c for mono, c in generator.as_dict().items()})

    relations = []
    for element in engine.compute(vectors):
        if element.lead[0] < n:
            continue
        column = tuple(ring.reduce(e) for e in engine.to_columns(element.terms, m, offset=n))
        if any(column):
            relations.append(column)

    if LOGGER.is_enabled_for(DEBUG):
        LOGGER.fields({'generators': m, 'relations': len(relations)}).debug('syzygies computed')

    return SubmoduleOfFree(ring, degrees, relations)


def _first_coordinates(ring: RingSpec, first: Column, first_degree: int, module: SubmoduleOfFree) -> Ideal:
    """Ideal of the a with a * first in ``module``: first coordinates of the relations of [first | module]."""

    combined = SubmoduleOfFree(
        ring, module.twists, [first] + module.generators, [first_degree] + module.degrees
    )
    return Ideal(ring, [relation[0] for relation in syzygies(combined).generators])


def module_quotient(module: SubmoduleOfFree, other: Union[SubmoduleOfFree, Sequence[Column]]) -> Ideal:
    """``(module :_R other)``: ring elements carrying every generator of ``other`` into ``module``."""

    ring = module.ring
    if not isinstance(other, SubmoduleOfFree):
        other = SubmoduleOfFree(ring, module.twists, other)
    if other.twists != module.twists:
        raise UsageError("module quotient needs submodules of the same free module")

    result: Optional[Ideal] = None
    for column, degree in zip(other.generators, other.degrees):
        if module.contains(column):
            continue
        current = _first_coordinates(ring, column, degree, module)
        result = current if result is None else ideal_ops(result, current, 'intersection')
    return result if result is not None else Ideal.unit(ring)


def ideal_quotient(ideal: Ideal, other: Union[Ideal, Polynomial]) -> Ideal:
    """``(I : f)`` or ``(I : K)`` over R."""

    ring = ideal.ring
    if isinstance(other, Ideal):
        return module_quotient(ideal.module, other.module)
    other = ring.reduce(other)
    if not other or ideal.contains(other):
        return Ideal.unit(ring)
    return module_quotient(ideal.module, [(other,)])


def _tagged(ring: RingSpec) -> Tuple[RingSpec, Polynomial]:
    tagged = ring.ambient.with_tags(['t'])
    return tagged, tagged.gens[0]


def _intersection(left: Ideal, right: Ideal) -> Ideal:
    """I ∩ K by eliminating t from t(I + J) + (1 - t)(K + J)."""

    ring = left.ring
    tagged, t = _tagged(ring)
    quotient = _quotient_polynomials(ring)
    lift = [t * f.embed(tagged, 1) for f in left.generators + quotient]
    lift += [(1 - t) * g.embed(tagged, 1) for g in right.generators + quotient]

    engine = Buchberger(tagged, (0,), product_criterion=True)
    basis = engine.compute([engine.to_vector([g]) for g in lift])

    generators = []
    for element in basis:
        if element.lead[1][0]:
            continue
        generators.append(engine.to_columns(element.terms, 1)[0].project(ring.ambient, 1))
    return Ideal(ring, generators)


def ideal_ops(left: Ideal, right: Ideal, op: str) -> Ideal:
    """Sum, product or intersection of two ideals of the same ring."""

    if left.ring != right.ring:
        raise UsageError(f"ideals of {left.ring} and {right.ring} cannot be combined")
    ring = left.ring

    if op == 'sum':
        return Ideal(ring, left.generators + right.generators)

    if op == 'product':
        if left.is_zero() or right.is_zero():
            return Ideal.zero(ring)
        products = [f * g for f in left.generators for g in right.generators]
        return Ideal(ring, products).minimal_generators()

    if op == 'intersection':
        if left.is_unit():
            return right
        if right.is_unit():
            return left
        if left.contains_ideal(right):
            return right
        if right.contains_ideal(left):
            return left
        return _intersection(left, right)

    raise UsageError(f"unknown ideal operation {op!r}")


def intersect_all(ideals: Sequence[Ideal], ring: RingSpec) -> Ideal:
    """Intersection of a family of ideals; the unit ideal for an empty family."""

    result = Ideal.unit(ring)
    for ideal in ideals:
        result = ideal_ops(result, ideal, 'intersection')
    return result


def radical_membership(element: Polynomial, ideal: Ideal) -> bool:
    """Whether some power of ``element`` lies in ``ideal``, via 1 - t f in (I + J)S[t]."""

    ring = ideal.ring
    element = ring.reduce(element)
    if not element or ideal.contains(element):
        return True
    if ideal.is_zero() and ring.is_polynomial_ring:
        return False

    tagged, t = _tagged(ring)
    lift = [g.embed(tagged, 1) for g in ideal.generators + _quotient_polynomials(ring)]
    lift.append(1 - t * element.embed(tagged, 1))

    engine = Buchberger(tagged, (0,), product_criterion=True)
    constant = (0,) * tagged.ngens
    return any(e.lead[1] == constant for e in engine.compute([engine.to_vector([g]) for g in lift]))


def radical_ideal_equal(left: Ideal, right: Ideal) -> bool:
    """Equality of radicals, by mutual radical membership of the generators."""

    return (all(radical_membership(g, right) for g in left.generators)
            and all(radical_membership(g, left) for g in right.generators))


def minimal_generators(module: SubmoduleOfFree) -> SubmoduleOfFree:
    """A minimal homogeneous generating subset, chosen greedily by increasing degree.

    In each degree the candidates are reduced modulo the Groebner basis of the lower-degree
    generators kept so far; the remainders depend linearly on the candidates, so Gaussian
    elimination on them picks an independent subset.
    """

    module = module.nonzero()
    ring = module.ring
    order = sorted(range(len(module)), key=lambda j: module.degrees[j])
    generators, degrees = module.generators, module.degrees

    kept: List[int] = []
    position = 0
    while position < len(order):
        degree = degrees[order[position]]
        group = []
        while position < len(order) and degrees[order[position]] == degree:
            group.append(order[position])
            position += 1

        lower = GroebnerBasis(ring, module.twists, [generators[j] for j in kept])
        rows: List[Tuple[Term, Vector]] = []
        for j in group:
            vector = lower.reduce_vector(lower.engine.to_vector(generators[j]))
            vector = _eliminate(vector, rows)
            if vector:
                pivot = lower.engine.lead(vector)
                inverse = ring.field.one / vector[pivot]
                rows.append((pivot, {term: c * inverse for term, c in vector.items()}))
                kept.append(j)

    kept.sort()
    return SubmoduleOfFree(ring, module.twists, [generators[j] for j in kept], [degrees[j] for j in kept])


def _eliminate(vector: Vector, rows: Sequence[Tuple[Term, Vector]]) -> Vector:
    vector = dict(vector)
    for pivot, row in rows:
        factor = vector.get(pivot)
        if not factor:
            continue
        for term, c in row.items():
            value = vector.get(term)
            value = -factor * c if value is None else value - factor * c
            if value:
                vector[term] = value
            else:
                vector.pop(term, None)
    return vector
