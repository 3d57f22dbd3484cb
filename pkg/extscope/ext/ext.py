"""Ext modules computed from minimal free resolutions."""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from extscope.errors import TruncationError, UsageError
from extscope.ext.homology import homology
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.logger import LOGGER
from extscope.poly.ring import RingSpec

Coefficients = Union[PresentedModule, RingSpec]


@dataclass
class ExtResult:
    """Ext^index(source, target) as a presented module.

    ``index`` is a tuple for iterated Ext. ``window_valid_up_to`` is the last resolution index the
    computation relied on (infinity for a complete resolution).
    """

    module: PresentedModule
    index: Union[int, Tuple[int, ...]]
    source: PresentedModule
    target: Optional[PresentedModule]
    window_valid_up_to: Union[int, float] = math.inf
    notes: list = field(default_factory=list)

    @property
    def ring(self) -> RingSpec:
        return self.module.ring

    @property
    def annihilator(self) -> Ideal:
        return self.module.annihilator()

    def is_zero(self) -> bool:
        return self.module.is_zero()

    def mu(self) -> int:
        return self.module.mu()

    def hilbert_series(self):
        return self.module.hilbert_series()

    def to_json(self) -> dict:
        return {
            'index': list(self.index) if isinstance(self.index, tuple) else self.index,
            'zero': self.is_zero(),
            'mu': self.mu(),
            'annihilator': self.annihilator.to_json(),
            'presentation': self.module.minimal_presentation().to_json(),
            'window_valid_up_to': 'inf' if self.window_valid_up_to == math.inf else self.window_valid_up_to,
        }


def as_module(target: Coefficients) -> PresentedModule:
    """A ring stands for the free module of rank one."""

    if isinstance(target, RingSpec):
        return PresentedModule.free(target)
    return target


def ext(source: PresentedModule, target: Coefficients, index: int, up_to: Optional[int] = None) -> ExtResult:
    """Ext^index_R(source, target) = H^index(Hom(F, target)) for the minimal resolution F of ``source``.

    Needs F up to index + 1; ``up_to`` may ask for a longer resolution to be cached.

    :raise UsageError: for a negative index or modules over different rings
    :raise TruncationError: when the resolution does not reach index + 1
    """

    if index < 0:
        raise UsageError(f"Ext index must be non-negative, got {index}")

    target = as_module(target)
    if source.ring != target.ring:
        raise UsageError(f"modules over {source.ring} and {target.ring}")

    needed = index + 1
    resolution = source.resolution(max(needed, up_to or 0))
    if not resolution.is_complete and resolution.truncated_at < needed:
        raise TruncationError(f"Ext^{index} needs F_{needed}", needed)

    middle = resolution.free_module(index).dual()
    into = resolution.differential(index).transpose() if index >= 1 else None
    out = resolution.differential(index + 1).transpose()

    LOGGER.fields({'index': index, 'rank': middle.rank}).debug('computing ext')
    module = homology(middle, into, out, target, provenance=f"Ext^{index}({source.provenance}, {target.provenance})")
    return ExtResult(module, index, source, target, resolution.computed_up_to)


def iterated_ext(source: PresentedModule, path: Sequence[int]) -> ExtResult:
    """Ext^{i_1}(Ext^{i_2}(... Ext^{i_k}(M, R) ..., R), R), applied from the right.

    The empty path returns M itself; a zero intermediate module ends the chain with zero.
    """

    path = tuple(path)
    current = source
    window: Union[int, float] = math.inf
    for index in reversed(path):
        if index < 0:
            raise UsageError(f"Ext index must be non-negative, got {index}")
        if current.is_zero():
            return ExtResult(PresentedModule.zero(source.ring), path, source, None, window)
        result = ext(current, source.ring, index)
        window = min(window, result.window_valid_up_to)
        current = result.module
    return ExtResult(current, path, source, None, window)


def annihilator(module: Union[PresentedModule, ExtResult]) -> Ideal:
    """Ann_R of a presented module or an Ext result."""

    if isinstance(module, ExtResult):
        return module.annihilator
    return module.annihilator()


@dataclass
class ComparisonReport:
    """Outcome of comparing two modules by invariants (not by an explicit isomorphism)."""

    left: ExtResult
    right: ExtResult
    hilbert_equal: bool
    annihilator_equal: bool
    mu_equal: bool
    evidence: str = 'invariant-level'

    @property
    def equal(self) -> bool:
        return self.hilbert_equal and self.annihilator_equal and self.mu_equal

    def to_json(self) -> dict:
        return {
            'equal': self.equal,
            'hilbert_equal': self.hilbert_equal,
            'annihilator_equal': self.annihilator_equal,
            'mu_equal': self.mu_equal,
            'evidence': self.evidence,
        }


def compare_modules(left: ExtResult, right: ExtResult) -> ComparisonReport:
    """Compare normalized Hilbert series, annihilators and minimal generator counts."""

    return ComparisonReport(
        left,
        right,
        hilbert_equal=left.hilbert_series().normalized() == right.hilbert_series().normalized(),
        annihilator_equal=left.annihilator.equals(right.annihilator),
        mu_equal=left.mu() == right.mu(),
    )


def ext_shift_check(ideal: Ideal, index: int) -> ComparisonReport:
    """Compare Ext^index(I, R) with Ext^(index+1)(R/I, R) for index >= 1."""

    if index < 1:
        raise UsageError("the shift holds for index >= 1")

    left = ext(PresentedModule.from_ideal(ideal), ideal.ring, index)
    right = ext(PresentedModule.cyclic(ideal), ideal.ring, index + 1)
    return compare_modules(left, right)


def diagonal_ext(source: PresentedModule, index: int, length: int) -> List[ExtResult]:
    """M, M_(i), M_(i,i), ... : entry p applies Ext^index(-, R) p times, for p = 0 .. length."""

    if length < 0:
        raise UsageError(f"diagonal length must be non-negative, got {length}")

    chain = [iterated_ext(source, ())]
    for p in range(1, length + 1):
        previous = chain[-1]
        path = (index,) * p
        if previous.is_zero():
            chain.append(ExtResult(previous.module, path, source, None, previous.window_valid_up_to))
            continue
        step = ext(previous.module, source.ring, index)
        window = min(previous.window_valid_up_to, step.window_valid_up_to)
        chain.append(ExtResult(step.module, path, source, None, window))
    return chain


def bridger_stability_check(source: PresentedModule, index: int) -> ComparisonReport:
    """Compare M_(i,i) with M_(i,i,i,i) by invariants."""

    chain = diagonal_ext(source, index, 4)
    return compare_modules(chain[2], chain[4])


@dataclass
class StabilityReport:
    """Diagonal iterated Ext modules M_(i,...,i) with p indices, for p up to ``length``.

    ``comparisons`` matches each p >= 4 against p - 2. ``support_equal`` compares the union of the supports
    for p <= 3 with the union for p <= length, through the radical of the product of the annihilators.
    """

    index: int
    length: int
    comparisons: Dict[int, ComparisonReport]
    support_equal: bool
    evidence: str = 'invariant-level'

    @property
    def equal(self) -> bool:
        return self.support_equal and all(report.equal for report in self.comparisons.values())

    def to_json(self) -> dict:
        return {
            'index': self.index,
            'length': self.length,
            'equal': self.equal,
            'support_equal': self.support_equal,
            'comparisons': {str(p): report.to_json() for p, report in self.comparisons.items()},
            'evidence': self.evidence,
        }


def _support_product(results: Sequence[ExtResult], ring: RingSpec) -> Ideal:
    product = Ideal.unit(ring)
    for result in results:
        product = product * result.annihilator
    return product


def diagonal_stabilization_check(source: PresentedModule, index: int, length: int = 5) -> StabilityReport:
    """Over a Gorenstein ring the diagonal modules repeat with period two from p = 2 on, so the supports
    of M_(i,...,i) for p <= 3 already cover those for every p <= length.

    :raise UsageError: for a length below 3
    """

    if length < 3:
        raise UsageError(f"diagonal stabilization needs length >= 3, got {length}")

    chain = diagonal_ext(source, index, length)
    comparisons = {p: compare_modules(chain[p], chain[p - 2]) for p in range(4, length + 1)}
    ring = source.ring
    support_equal = _support_product(chain[:4], ring).radical_equals(_support_product(chain, ring))

    LOGGER.fields({'index': index, 'length': length, 'support_equal': support_equal}).debug('diagonal ext compared')
    return StabilityReport(index, length, comparisons, support_equal)
