"""Bounded complexes of graded free modules."""

from typing import Dict, List, Optional, Sequence

from extscope.complexes.free_module import FreeModule, ModuleMap
from extscope.errors import IntegrityError, UsageError


class FreeComplex:
    """Chain complex ``F_hi -> ... -> F_lo -> F_(lo-1)`` with ``d_k: F_k -> F_(k-1)``.

    ``maps[0]`` is d_lo. A complex without maps is a single module ``base`` sitting in degree lo - 1.
    Construction checks that consecutive maps compose and that every composite vanishes.

    :param maps: Differentials in increasing homological degree
    :param lo: Homological degree of the first differential
    :param base: The module F_(lo-1) when there are no maps
    """

    def __init__(self, maps: Sequence[ModuleMap], lo: int = 1, base: Optional[FreeModule] = None):
        maps = list(maps)
        if not maps and base is None:
            raise UsageError("an empty complex needs its base module")

        for lower, upper in zip(maps, maps[1:]):
            if upper.target != lower.source:
                raise UsageError("consecutive differentials do not compose")
            if not lower.compose(upper).is_zero():
                raise IntegrityError("d∘d is not zero")

        self.__maps = maps
        self.__lo = lo
        self.__base = maps[0].target if maps else base

    @property
    def lo(self) -> int:
        return self.__lo

    @property
    def hi(self) -> int:
        """Degree of the last differential (lo - 1 without maps)."""
        return self.__lo + len(self.__maps) - 1

    @property
    def ring(self):
        return self.__base.ring

    @property
    def maps(self) -> List[ModuleMap]:
        return list(self.__maps)

    def differential(self, k: int) -> Optional[ModuleMap]:
        """d_k, or None outside [lo, hi]."""

        if self.__lo <= k <= self.hi:
            return self.__maps[k - self.__lo]
        return None

    def module(self, k: int) -> FreeModule:
        """F_k; the zero module outside [lo - 1, hi]."""

        if k == self.__lo - 1:
            return self.__base
        d = self.differential(k)
        if d is not None:
            return d.source
        return FreeModule(self.ring, ())

    def ranks(self) -> Dict[int, int]:
        return {k: self.module(k).rank for k in range(self.__lo - 1, self.hi + 1)}

    def hom_transpose(self) -> 'FreeComplex':
        """``Hom(F, R)`` as a chain complex: D_j = F_(-j)* with differential d_(1-j)^T."""

        if not self.__maps:
            return FreeComplex([], 1 - self.__lo + 1, self.__base.dual())
        dual = [d.transpose() for d in reversed(self.__maps)]
        return FreeComplex(dual, 1 - self.hi)

    def __str__(self) -> str:
        parts = [str(self.module(k)) for k in range(self.hi, self.__lo - 2, -1)]
        return ' <- '.join(reversed(parts))

    def to_json(self) -> dict:
        return {
            'lo': self.__lo,
            'ranks': [self.module(k).rank for k in range(self.__lo - 1, self.hi + 1)],
            'differentials': [d.to_json() for d in self.__maps],
        }
