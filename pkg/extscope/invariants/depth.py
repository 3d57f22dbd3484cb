"""Depth, grade and projective dimension, each detected by homology."""

import math
from typing import Optional, Sequence, Union

from extscope.complexes.koszul import koszul_complex
from extscope.errors import ConsistencyError
from extscope.ext.ext import Coefficients, as_module, ext
from extscope.ext.homology import homology
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.invariants.dimension import dimension
from extscope.invariants.window import homological_window
from extscope.logger import LOGGER
from extscope.poly.polynomial import Polynomial

Number = Union[int, float]


def koszul_homology(elements: Sequence[Polynomial], module: PresentedModule, j: int) -> PresentedModule:
    """H_j(f_1..f_n; M) = H_j(K(f) ⊗ M)."""

    complex_ = koszul_complex(elements, module.ring)
    return homology(
        complex_.module(j),
        complex_.differential(j + 1),
        complex_.differential(j),
        module,
        provenance=f"H_{j}(koszul; {module.provenance})",
    )


def koszul_grade(elements: Sequence[Polynomial], module: PresentedModule) -> Number:
    """n - max{j : H_j(f; M) != 0}; infinity when every H_j vanishes (for example M = 0 or a unit among f)."""

    n = len(elements)
    for j in range(n, -1, -1):
        if not koszul_homology(elements, module, j).is_zero():
            return n - j
    return math.inf


def depth(module: PresentedModule) -> Number:
    """Depth with respect to the ideal of the variables; infinity for the zero module."""

    if module.is_zero():
        return math.inf
    return koszul_grade(module.ring.gens, module)


def grade_by_koszul(ideal: Ideal, target: Optional[Coefficients] = None) -> Number:
    """grade(I, N) from the Koszul complex on a minimal generating set of I."""

    target = as_module(target if target is not None else ideal.ring)
    if target.is_zero():
        return math.inf
    return koszul_grade(ideal.minimal_generators().generators, target)


def grade_by_ext(module: PresentedModule, target: Optional[Coefficients] = None) -> Number:
    """inf{i : Ext^i(M, N) != 0}, searched for i <= dim N.

    :raise ConsistencyError: when no Ext up to dim N is nonzero for nonzero M and N
    """

    target = as_module(target if target is not None else module.ring)
    if module.is_zero() or target.is_zero():
        return math.inf

    bound = dimension(target)
    for i in range(0, bound + 1):
        if not ext(module, target, i).is_zero():
            return i
    raise ConsistencyError(f"Ext^i({module.provenance}, {target.provenance}) vanishes for every i <= {bound}")


def grade(subject: Union[PresentedModule, Ideal], target: Optional[Coefficients] = None) -> Number:
    """grade(M) = grade(Ann M, R), or grade(I, N) for an ideal, computed by Ext and by Koszul homology.

    :raise ConsistencyError: when the two computations disagree
    """

    if isinstance(subject, Ideal):
        ideal = subject
        module = PresentedModule.cyclic(ideal)
    else:
        module = subject
        ideal = module.annihilator()

    if module.is_zero():
        return math.inf

    by_ext = grade_by_ext(module, target)
    by_koszul = grade_by_koszul(ideal, target)
    if by_ext != by_koszul:
        LOGGER.fields({'module': module.provenance, 'ext': by_ext, 'koszul': by_koszul}).error('grade mismatch')
        raise ConsistencyError(f"grade of {module.provenance}: {by_ext} by Ext, {by_koszul} by Koszul homology")
    return by_ext


def projective_dimension(module: PresentedModule, window: Optional[int] = None) -> Number:
    """Length of the minimal resolution; infinity when it does not end inside the window, -1 for M = 0."""

    resolution = module.resolution(homological_window(module.ring, window))
    if not resolution.is_complete:
        LOGGER.fields({'module': module.provenance, 'window': resolution.truncated_at}) \
            .warning('resolution does not end inside the window')
    return resolution.projective_dimension


def is_cohen_macaulay(module: PresentedModule) -> bool:
    """depth M = dim M for a nonzero module."""

    if module.is_zero():
        return False
    return depth(module) == dimension(module)
