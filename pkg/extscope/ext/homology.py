"""Homology of free complexes with coefficients in a presented module, and subquotients."""

from typing import List, Optional

from extscope.complexes.free_module import FreeModule, ModuleMap
from extscope.errors import IntegrityError
from extscope.ext.presented import PresentedModule
from extscope.groebner.operations import minimal_generators, syzygies
from extscope.groebner.submodule import Column, SubmoduleOfFree
from extscope.logger import LOGGER


def subquotient(kernel: SubmoduleOfFree, image: SubmoduleOfFree, provenance: str = 'subquotient') -> PresentedModule:
    """Presentation of K/I for submodules I ⊆ K of the same free module.

    Generators are those of K; relations are the first blocks of the relations among [K | I].

    :raise IntegrityError: when I is not contained in K
    """

    ring = kernel.ring
    kernel = minimal_generators(kernel.nonzero())
    image = image.nonzero()

    if not kernel.contains_module(image):
        raise IntegrityError("image is not contained in kernel")

    count = len(kernel)
    if count == 0:
        return PresentedModule(ModuleMap(FreeModule(ring, ()), FreeModule(ring, ()), []), provenance)

    combined = SubmoduleOfFree(ring, kernel.twists, kernel.generators + image.generators,
                               kernel.degrees + image.degrees)
    relations = syzygies(combined)

    columns: List[Column] = []
    degrees: List[int] = []
    for column, degree in zip(relations.generators, relations.degrees):
        head = column[:count]
        if any(head):
            columns.append(head)
            degrees.append(degree)

    presentation = ModuleMap(FreeModule(ring, tuple(degrees)), FreeModule(ring, tuple(kernel.degrees)), columns)
    return PresentedModule(presentation, provenance)


def _coefficient_relations(module: FreeModule, coefficients: ModuleMap) -> SubmoduleOfFree:
    """Relations of ``module ⊗ N`` for N = coker(B): the columns e_k ⊗ b."""

    ring = module.ring
    p = coefficients.target.rank
    zero = ring.zero
    columns, degrees = [], []
    for k, twist in enumerate(module.twists):
        for column, degree in zip(coefficients.columns, coefficients.source.twists):
            entries = [zero] * (module.rank * p)
            for r, entry in enumerate(column):
                entries[k * p + r] = entry
            columns.append(tuple(entries))
            degrees.append(twist + degree)
    return SubmoduleOfFree(ring, module.tensor(coefficients.target.twists).twists, columns, degrees)


def homology(
    middle: FreeModule,
    into: Optional[ModuleMap],
    out: Optional[ModuleMap],
    coefficients: PresentedModule,
    provenance: str = 'homology',
) -> PresentedModule:
    """ker(out ⊗ N) / im(into ⊗ N) at ``middle ⊗ N`` where ``into: prev -> middle`` and ``out: middle -> next``.

    Tensoring with N = coker(B) turns each free module F into F ⊗ F_0(N) modulo F ⊗ Im B. The kernel
    is the preimage of ``next ⊗ Im B``, read off the relations among [out ⊗ N | next ⊗ Im B].
    """

    ring = middle.ring
    B = coefficients.minimal_presentation()
    twists = B.target.twists
    here = middle.tensor(twists)

    if here.rank == 0:
        return PresentedModule.zero(ring)

    if out is None or out.target.rank == 0:
        kernel = SubmoduleOfFree(ring, here.twists, here.basis(), here.twists)
    else:
        mapped = out.tensor(twists)
        beyond = _coefficient_relations(out.target, B)
        combined = SubmoduleOfFree(ring, beyond.twists, mapped.columns + beyond.generators,
                                   list(here.twists) + beyond.degrees)
        relations = syzygies(combined)
        columns, degrees = [], []
        for column, degree in zip(relations.generators, relations.degrees):
            head = column[:here.rank]
            if any(head):
                columns.append(head)
                degrees.append(degree)
        kernel = SubmoduleOfFree(ring, here.twists, columns, degrees)

    boundary = _coefficient_relations(middle, B)
    columns, degrees = boundary.generators, boundary.degrees
    if into is not None and into.source.rank:
        incoming = into.tensor(twists)
        columns = incoming.columns + columns
        degrees = list(incoming.source.twists) + degrees
    image = SubmoduleOfFree(ring, here.twists, columns, degrees)

    LOGGER.fields({'rank': here.rank, 'cycles': len(kernel), 'boundaries': len(image)}).debug('homology')
    return subquotient(kernel, image, provenance)
