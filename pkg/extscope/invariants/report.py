"""The invariant report of a module: grade, depth, dimension, Betti numbers, annihilator ideals and flags."""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.invariants.annihilators import Gamma, gamma, hann
from extscope.invariants.depth import depth, grade
from extscope.invariants.dimension import dimension
from extscope.invariants.hilbert import HilbertSeries
from extscope.invariants.support import nonvanishing_indices
from extscope.invariants.window import homological_window
from extscope.utils import sentinel

Number = Union[int, float]


@dataclass
class InvariantReport:
    """Invariants of one module M over R.

    ``g`` grade, ``t`` depth, ``r`` dim M, ``d`` dim R. The inequality chain t <= r <= d and g + r <= d is
    evaluated into ``chain_holds``; ``grade_le_depth`` is only informative.
    """

    module: str
    g: Number
    t: Number
    r: int
    d: int
    betti: List[int]
    mu: int
    hilbert: HilbertSeries
    ann: Ideal
    gamma: Gamma
    hann: Ideal
    pd: Number
    window: int
    flags: Dict[str, bool] = field(default_factory=dict)

    @property
    def chain_holds(self) -> bool:
        if self.r < 0:
            return True
        return self.t <= self.r <= self.d and self.g + self.r <= self.d

    def to_json(self) -> dict:
        return {
            'module': self.module,
            'g': sentinel(self.g),
            't': sentinel(self.t),
            'r': self.r,
            'd': self.d,
            'pd': sentinel(self.pd),
            'betti': self.betti,
            'mu': self.mu,
            'hilbert': self.hilbert.to_json(),
            'ann': self.ann.to_json(),
            'gamma': self.gamma.to_json(),
            'hann': self.hann.to_json(),
            'window': self.window,
            'chain_holds': self.chain_holds,
            'flags': dict(sorted(self.flags.items())),
        }


def _zero_report(module: PresentedModule, window: int) -> InvariantReport:
    ring = module.ring
    unit = Ideal.unit(ring)
    return InvariantReport(
        module.provenance, math.inf, math.inf, -1, ring.dimension, [], 0, module.hilbert_series(), unit,
        Gamma(unit, math.inf, False), unit, -1, window, {
            'cohen_macaulay': False,
            'perfect': False,
            'quasi_perfect': False,
            'finite_pd': True,
            'grade_le_depth': True,
        }
    )


def compute_invariants(module: PresentedModule, window: Optional[int] = None) -> InvariantReport:
    """All invariants of M; resolutions and Ext families are computed up to the homological window."""

    ring = module.ring
    window = homological_window(ring, window)
    if module.is_zero():
        return _zero_report(module, window)

    resolution = module.resolution(window)
    pd = resolution.projective_dimension
    g = grade(module)
    t = depth(module)
    r = dimension(module)
    indices = nonvanishing_indices(module, window)

    flags = {
        'cohen_macaulay': t == r,
        'perfect': pd != math.inf and g == pd,
        'quasi_perfect': bool(indices) and min(indices) == max(indices),
        'finite_pd': pd != math.inf,
        'grade_le_depth': g <= t,
    }
    return InvariantReport(
        module.provenance,
        g,
        t,
        r,
        ring.dimension,
        resolution.betti(),
        module.mu(),
        module.hilbert_series(),
        module.annihilator(),
        gamma(module, None if ring.is_polynomial_ring else window),
        hann(module),
        pd,
        window,
        flags,
    )
