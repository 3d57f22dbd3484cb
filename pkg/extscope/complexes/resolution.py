"""Graded free resolutions by iterated syzygies."""

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, List, Optional, Union

from extscope.complexes.complex import FreeComplex
from extscope.complexes.free_module import FreeModule, ModuleMap
from extscope.errors import ConsistencyError, UsageError
from extscope.groebner.operations import minimal_generators, syzygies
from extscope.groebner.submodule import SubmoduleOfFree
from extscope.logger import LOGGER

if TYPE_CHECKING:
    from extscope.ext.presented import PresentedModule


@dataclass(frozen=True)
class Resolution:
    """Free resolution ``F_L -> ... -> F_0 -> M -> 0``.

    ``truncated_at`` is None when the resolution is complete (F_(L+1) = 0), otherwise the last computed
    index L; nothing is claimed about F_(L+1).
    """

    module: 'PresentedModule'
    complex: FreeComplex
    minimal: bool
    truncated_at: Optional[int]

    @property
    def length(self) -> int:
        """Index of the last nonzero free module (-1 for the zero module)."""

        last = self.complex.hi
        while last >= 0 and self.complex.module(last).rank == 0:
            last -= 1
        return last

    @property
    def is_complete(self) -> bool:
        return self.truncated_at is None

    @property
    def computed_up_to(self) -> Union[int, float]:
        """Highest index known: ``truncated_at`` or infinity for a complete resolution."""
        return math.inf if self.truncated_at is None else self.truncated_at

    def free_module(self, k: int) -> FreeModule:
        if self.truncated_at is not None and k > self.truncated_at:
            raise UsageError(f"F_{k} is beyond the computed window {self.truncated_at}")
        return self.complex.module(k)

    def differential(self, k: int) -> ModuleMap:
        """d_k: F_k -> F_(k-1), the zero map outside the computed range."""

        d = self.complex.differential(k)
        if d is not None:
            return d
        return ModuleMap.zero(self.free_module(k), self.free_module(k - 1))

    def betti(self) -> List[int]:
        """Ranks of F_0 .. F_L."""
        return [self.complex.module(k).rank for k in range(0, self.length + 1)]

    def graded_betti(self) -> List[List[int]]:
        """Generator degrees of each F_k."""
        return [list(self.complex.module(k).twists) for k in range(0, self.length + 1)]

    @property
    def projective_dimension(self) -> Union[int, float]:
        """Length of a complete minimal resolution; infinity when unknown."""

        if not self.is_complete:
            return math.inf
        return self.length

    def to_json(self) -> dict:
        return {
            'betti': self.betti(),
            'graded_betti': self.graded_betti(),
            'minimal': self.minimal,
            'truncated_at': self.truncated_at,
        }


def _free(module: SubmoduleOfFree) -> FreeModule:
    return FreeModule(module.ring, tuple(module.degrees))


def free_resolution(module: 'PresentedModule', up_to: int, minimal: bool = True) -> Resolution:
    """Resolution of ``module`` computed up to F_up_to.

    With ``minimal`` the presentation is pruned and each syzygy module is cut to a minimal
    generating set, so ranks are graded Betti numbers. Over a polynomial ring with n variables a
    nonzero F_k with k > n in a minimal resolution is reported as a ConsistencyError.
    """

    if up_to < 0:
        raise UsageError(f"up_to must be non-negative, got {up_to}")

    ring = module.ring
    presentation = module.minimal_presentation() if minimal else module.presentation
    base = presentation.target
    relations = presentation.image().nonzero()
    if minimal:
        relations = minimal_generators(relations)

    maps: List[ModuleMap] = []
    truncated_at = None
    k = 1
    while len(relations) and base.rank:
        if k > up_to:
            truncated_at = up_to
            break
        if minimal and ring.is_polynomial_ring and k > ring.ngens:
            raise ConsistencyError(f"nonzero F_{k} over a polynomial ring in {ring.ngens} variables")

        source = _free(relations)
        d = ModuleMap(source, maps[-1].source if maps else base, relations.generators)
        maps.append(d)
        LOGGER.fields({'step': k, 'rank': source.rank}).debug('resolution step')

        relations = syzygies(d.image()).nonzero()
        if minimal:
            relations = minimal_generators(relations)
        k += 1

    complex_ = FreeComplex(maps, 1, base)
    return Resolution(module, complex_, minimal, truncated_at)
