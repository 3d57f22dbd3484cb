"""Annihilators of Ext modules and the ideals built from them: gamma and Hann."""

import math
from dataclasses import dataclass
from typing import List, Optional, Union

from extscope.ext.ext import Coefficients, ext
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.groebner.operations import intersect_all
from extscope.invariants.window import homological_window
from extscope.logger import LOGGER
from extscope.poly.polynomial import Polynomial


def ext_annihilators(module: PresentedModule, first: int, last: int,
                     target: Optional[Coefficients] = None) -> List[Ideal]:
    """[Ann Ext^i(M, N) for i in first..last], N = R by default."""

    target = target if target is not None else module.ring
    return [ext(module, target, i, up_to=last + 1).annihilator for i in range(first, last + 1)]


@dataclass
class Gamma:
    """The intersection over 0 < i <= window of the radicals of Ann Ext^i(M, R), held as the intersection
    of the annihilators themselves (same radical).

    ``truncated`` is set when higher Ext modules may be nonzero beyond the window.
    """

    ideal: Ideal
    window: Union[int, float]
    truncated: bool

    def contains(self, element: Union[Polynomial, str]) -> bool:
        """Membership in the radical."""
        return self.ideal.radical_contains(element)

    def radical_equals(self, other: Union[Ideal, 'Gamma']) -> bool:
        other = other.ideal if isinstance(other, Gamma) else other
        return self.ideal.radical_equals(other)

    def to_json(self) -> dict:
        return {
            'ideal': self.ideal.to_json(),
            'window': 'inf' if self.window == math.inf else self.window,
            'truncated': self.truncated,
        }


def gamma(module: PresentedModule, window: Optional[int] = None) -> Gamma:
    """gamma(M) over the declared window.

    Over a polynomial ring the window defaults to the length of the resolution, beyond which Ext vanishes.
    Over a quotient ring a finite window is a truncation and is logged as a warning.
    """

    ring = module.ring
    if module.is_zero():
        return Gamma(Ideal.unit(ring), math.inf, False)

    if ring.is_polynomial_ring and window is None:
        resolution = module.resolution(ring.ngens + 1)
        last, truncated = max(resolution.length, 1), False
    else:
        last = homological_window(ring, window)
        resolution = module.resolution(last + 1)
        truncated = not resolution.is_complete
        if truncated:
            LOGGER.fields({'module': module.provenance, 'window': last}).warning('gamma truncated to the window')

    ideal = intersect_all(ext_annihilators(module, 1, last), ring)
    return Gamma(ideal, last, truncated)


def hann(module: PresentedModule) -> Ideal:
    """Product of Ann Ext^i(M, R) for i = 0..dim R."""

    ring = module.ring
    if module.is_zero():
        return Ideal.unit(ring)

    result = Ideal.unit(ring)
    for annihilator in ext_annihilators(module, 0, ring.dimension):
        result = result * annihilator
    return result
