"""Single-shot computations from inline arguments."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from extscope.config import Settings
from extscope.errors import UsageError
from extscope.ext.ext import ext
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.invariants import compute_invariants, dimension, eass_experiment
from extscope.invariants.window import homological_window
from extscope.poly.parser import parse_generators, parse_ring
from extscope.poly.ring import RingSpec

DEFAULT_RING = 'QQ[x,y,z]'
ZERO_MODULE = '0'
SUBCOMMANDS = ('ext', 'resolve', 'invariants', 'eass')


@dataclass
class ComputeResult:
    """Result of one ``compute`` subcommand, echoing the ring and the effective settings."""

    command: str
    ring: str
    settings: Dict[str, Any]
    result: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return True

    @property
    def exit_code(self) -> int:
        return 0

    def to_json(self) -> dict:
        return {'command': self.command, 'ring': self.ring, 'settings': self.settings, 'result': self.result}


def _ideal(ring: RingSpec, text: str) -> Ideal:
    return Ideal(ring, [ring.reduce(g) for g in parse_generators(ring, text)])


def build_module(ring: RingSpec, module: Optional[str] = None, ideal: Optional[str] = None,
                 free: Optional[int] = None) -> PresentedModule:
    """R/I from ``module`` (``"0"`` is the zero module), I itself from ``ideal``, or R^free.

    :raise UsageError: unless exactly one source is given
    """

    given = [value for value in (module, ideal, free) if value is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --module, --ideal and --free")

    if module is not None:
        if module.strip() == ZERO_MODULE:
            return PresentedModule.zero(ring)
        return PresentedModule.cyclic(_ideal(ring, module), provenance=f"R/({module})")
    if ideal is not None:
        return PresentedModule.from_ideal(_ideal(ring, ideal), provenance=f"({ideal})")
    if free < 0:
        raise UsageError(f"free rank must be non-negative, got {free}")
    return PresentedModule.free(ring, [0] * free) if free else PresentedModule.zero(ring)


def compute(command: str, ring: str = DEFAULT_RING, module: Optional[str] = None, ideal: Optional[str] = None,
            free: Optional[int] = None, index: Optional[int] = None, window: Optional[int] = None,
            settings: Optional[Settings] = None) -> ComputeResult:
    """Run one of ``ext``, ``resolve``, ``invariants`` or ``eass``.

    :raise UsageError: for an unknown subcommand or missing arguments
    :raise ParseError: for malformed ring or generator text
    """

    if command not in SUBCOMMANDS:
        raise UsageError(f"unknown compute subcommand {command!r}; expected one of {', '.join(SUBCOMMANDS)}")

    settings = settings or Settings()
    window = window if window is not None else settings.window
    spec = parse_ring(ring, settings.degree_cap)
    echoed = {'degree_cap': settings.degree_cap, 'window': homological_window(spec, window)}
    result = ComputeResult(command, str(spec), echoed)

    if command == 'eass':
        if ideal is None:
            raise UsageError("compute eass needs --ideal")
        report = eass_experiment(_ideal(spec, ideal), window if window is not None else 8)
        result.settings['window'] = report.window
        result.result = report.to_json()
        return result

    subject = build_module(spec, module, ideal, free)
    if command == 'ext':
        if index is None:
            raise UsageError("compute ext needs --i")
        value = ext(subject, spec, index)
        result.result = {**value.to_json(), 'dim': dimension(value.module),
                         'hilbert': value.hilbert_series().to_json()}
    elif command == 'resolve':
        result.result = subject.resolution(homological_window(spec, window)).to_json()
    else:
        result.result = compute_invariants(subject, window).to_json()
    return result
