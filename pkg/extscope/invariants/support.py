"""Supports up to radical and the checks comparing supports of modules with those of their Ext modules."""

import math
from dataclasses import dataclass, field
from typing import List, Optional

from extscope.errors import UnsupportedError
from extscope.ext.ext import Coefficients, as_module, ext
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.groebner.monomial import monomial_minimal_primes
from extscope.groebner.operations import intersect_all, radical_ideal_equal
from extscope.invariants.annihilators import ext_annihilators, hann
from extscope.invariants.depth import grade_by_koszul
from extscope.invariants.dimension import dimension, ideal_dimension
from extscope.invariants.window import homological_window


@dataclass
class SupportDescriptor:
    """V(ideal), compared up to radical. ``minimal_primes`` is filled when the ideal is monomial."""

    ideal: Ideal
    dimension: int
    minimal_primes: Optional[List[Ideal]] = None

    @classmethod
    def of_ideal(cls, ideal: Ideal) -> 'SupportDescriptor':
        try:
            primes = monomial_minimal_primes(ideal)
        except UnsupportedError:
            primes = None
        return cls(ideal, ideal_dimension(ideal), primes)

    @classmethod
    def of_module(cls, module: PresentedModule) -> 'SupportDescriptor':
        return cls.of_ideal(module.annihilator())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SupportDescriptor):
            return NotImplemented
        return radical_ideal_equal(self.ideal, other.ideal)

    def contains(self, other: 'SupportDescriptor') -> bool:
        """V(other) ⊆ V(self), that is rad(self) ⊆ rad(other)."""
        return all(other.ideal.radical_contains(g) for g in self.ideal.generators)

    def to_json(self) -> dict:
        return {
            'ideal': self.ideal.to_json(),
            'dimension': self.dimension,
            'minimal_primes': None if self.minimal_primes is None else [p.to_json() for p in self.minimal_primes],
        }


@dataclass
class SupportCheck:
    """Outcome of a support identity: both sides and whether they agree."""

    name: str
    left: SupportDescriptor
    right: SupportDescriptor
    holds: bool
    window: int
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            'check': self.name,
            'holds': self.holds,
            'window': self.window,
            'left': self.left.to_json(),
            'right': self.right.to_json(),
            **self.details,
        }


def homological_support_check(module: PresentedModule, target: Optional[Coefficients] = None,
                              window: Optional[int] = None) -> SupportCheck:
    """Supp(M ⊗ N) against the union of Supp Ext^i(M, N) for i <= dim N.

    The left side is V(Ann M + Ann N), the right side V of the intersection of the Ann Ext^i(M, N).
    """

    target = as_module(target if target is not None else module.ring)
    window = dimension(target) if window is None else window

    left = SupportDescriptor.of_ideal(module.annihilator() + target.annihilator())
    annihilators = ext_annihilators(module, 0, max(window, 0), target) if window >= 0 else []
    right = SupportDescriptor.of_ideal(intersect_all(annihilators, module.ring))
    return SupportCheck('homological_support', left, right, left == right, window)


@dataclass
class NonvanishingCheck:
    """Least nonvanishing Ext index against grade(Ann L, N)."""

    first_nonzero: Optional[int]
    grade: float
    holds: bool

    def to_json(self) -> dict:
        return {
            'check': 'nonvanishing',
            'first_nonzero': self.first_nonzero,
            'grade': 'inf' if self.grade == math.inf else self.grade,
            'holds': self.holds,
        }


def nonvanishing_check(module: PresentedModule, target: Coefficients) -> NonvanishingCheck:
    """For nonzero L and N: the least i <= dim N with Ext^i(L, N) != 0 equals grade(Ann L, N)."""

    target = as_module(target)
    grade = grade_by_koszul(module.annihilator(), target)
    first = None
    if not module.is_zero() and not target.is_zero():
        first = next((i for i in range(0, dimension(target) + 1) if not ext(module, target, i).is_zero()), None)
    return NonvanishingCheck(first, grade, first == grade if first is not None else grade == math.inf)


def nonvanishing_indices(module: PresentedModule, window: Optional[int] = None) -> List[int]:
    """Indices i <= window with Ext^i(M, R) != 0."""

    last = homological_window(module.ring, window)
    return [i for i in range(0, last + 1) if not ext(module, module.ring, i, up_to=last + 1).is_zero()]


def quasi_perfect_support_check(module: PresentedModule, window: Optional[int] = None) -> SupportCheck:
    """For a quasi-perfect M (a single nonvanishing Ext^g(M, R)): Supp M = Supp Ext^g(M, R) up to radical,
    and over a polynomial ring Hann(M) = Ann(M) exactly.

    A module that is not quasi-perfect reports ``holds`` False and ``quasi_perfect`` False in the details.
    """

    indices = nonvanishing_indices(module, window)
    left = SupportDescriptor.of_module(module)
    quasi_perfect = bool(indices) and min(indices) == max(indices)
    details = {'nonvanishing': indices, 'quasi_perfect': quasi_perfect}
    if not quasi_perfect:
        return SupportCheck('quasi_perfect_support', left, left, False, homological_window(module.ring, window),
                            details)

    g = indices[0]
    right = SupportDescriptor.of_module(ext(module, module.ring, g).module)
    holds = left == right
    if module.ring.is_polynomial_ring:
        details['hann_equals_ann'] = hann(module).equals(module.annihilator())
        holds = holds and details['hann_equals_ann']
    return SupportCheck('quasi_perfect_support', left, right, holds, homological_window(module.ring, window), details)
