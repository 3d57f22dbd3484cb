"""Koszul complexes of sequences of homogeneous elements."""

from itertools import combinations
from typing import List, Sequence, Union

from extscope.complexes.complex import FreeComplex
from extscope.complexes.free_module import FreeModule, ModuleMap
from extscope.errors import InhomogeneousError, UsageError
from extscope.poly.polynomial import ANY_DEGREE, Polynomial
from extscope.poly.ring import RingSpec


def _degrees(elements: Sequence[Polynomial]) -> List[int]:
    degrees = []
    for element in elements:
        degree = element.homogeneous_degree()
        if degree == ANY_DEGREE:
            degree = 0
        degrees.append(degree)
    return degrees


def koszul_complex(elements: Sequence[Polynomial], over: Union[RingSpec, object]) -> FreeComplex:
    """K(f_1..f_n; R): K_j has basis e_S for the j-subsets S (lexicographic), e_S of degree sum of deg f_s,
    and d(e_S) = sum_k (-1)^k f_(s_k) e_(S minus s_k).

    ``over`` is the ring or a presented module, whose ring is used; tensoring with the module is done by
    the homology routines.
    """

    ring = over if isinstance(over, RingSpec) else getattr(over, 'ring', None)
    if ring is None:
        raise UsageError("koszul_complex needs a ring or a presented module")

    elements = [ring.reduce(e) for e in elements]
    try:
        degrees = _degrees(elements)
    except InhomogeneousError as error:
        raise InhomogeneousError(f"Koszul complex of inhomogeneous elements: {error}", error.degrees) from error

    n = len(elements)
    subsets = [list(combinations(range(n), j)) for j in range(n + 1)]
    modules = [FreeModule(ring, tuple(sum(degrees[s] for s in subset) for subset in subsets[j])) for j in range(n + 1)]

    maps = []
    zero = ring.zero
    for j in range(1, n + 1):
        index = {subset: position for position, subset in enumerate(subsets[j - 1])}
        columns = []
        for subset in subsets[j]:
            column = [zero] * len(subsets[j - 1])
            for k, s in enumerate(subset):
                face = subset[:k] + subset[k + 1:]
                column[index[face]] = elements[s] if k % 2 == 0 else -elements[s]
            columns.append(tuple(column))
        maps.append(ModuleMap(modules[j], modules[j - 1], columns))

    return FreeComplex(maps, 1, modules[0])
