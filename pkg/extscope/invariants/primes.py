"""Associated-prime oracles built from the minimal primes of Ext annihilators over the ambient ring."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from extscope.errors import UnsupportedError
from extscope.ext.presented import PresentedModule
from extscope.groebner.ideal import Ideal
from extscope.groebner.monomial import monomial_associated_primes, monomial_minimal_primes
from extscope.invariants.annihilators import ext_annihilators
from extscope.invariants.depth import is_cohen_macaulay
from extscope.logger import LOGGER


@dataclass
class PrimeRecord:
    """A monomial prime found among Min(Ann Ext^i_S(M, S)), with the indices producing it."""

    prime: Ideal
    codim: int
    indices: List[int] = field(default_factory=list)

    @property
    def key(self) -> Tuple[str, ...]:
        return tuple(str(g) for g in self.prime.generators)

    def to_json(self) -> dict:
        return {'prime': self.prime.to_json(), 'codim': self.codim, 'indices': list(self.indices)}


@dataclass
class AssOracle:
    """Union of the monomial minimal primes of the Ext annihilators, with the refined subset of primes p
    found at index i = codim p, and the indices whose annihilator is not monomial."""

    primes: List[PrimeRecord]
    refined: List[PrimeRecord]
    unsupported: List[int]
    window: int

    @property
    def complete(self) -> bool:
        return not self.unsupported

    def prime_keys(self) -> List[Tuple[str, ...]]:
        return [record.key for record in self.primes]

    def to_json(self) -> dict:
        return {
            'primes': [record.to_json() for record in self.primes],
            'refined': [record.to_json() for record in self.refined],
            'unsupported': list(self.unsupported),
            'window': self.window,
        }


def _codim(prime: Ideal) -> int:
    return len(prime.generators)


def _sorted(records: Dict[Tuple[str, ...], PrimeRecord]) -> List[PrimeRecord]:
    return sorted(records.values(), key=lambda r: (r.codim, r.key))


def ass_oracle(module: PresentedModule, window: Optional[int] = None) -> AssOracle:
    """Min(Ann Ext^i_S(M, S)) for i = 0..window over the polynomial ring S, M read as an S-module.

    Over S the family ends at i = number of variables, which is the default window.
    """

    lifted = module.over_ambient()
    ring = lifted.ring
    last = ring.ngens if window is None else window

    found: Dict[Tuple[str, ...], PrimeRecord] = {}
    refined: Dict[Tuple[str, ...], PrimeRecord] = {}
    unsupported: List[int] = []

    for i, annihilator in enumerate(ext_annihilators(lifted, 0, last)):
        try:
            primes = monomial_minimal_primes(annihilator)
        except UnsupportedError:
            LOGGER.fields({'module': module.provenance, 'index': i}).warning('annihilator is not monomial')
            unsupported.append(i)
            continue

        for prime in primes:
            record = PrimeRecord(prime, _codim(prime))
            record = found.setdefault(record.key, record)
            record.indices.append(i)
            if record.codim == i:
                refined.setdefault(record.key, record)

    return AssOracle(_sorted(found), _sorted(refined), unsupported, last)


def cyclic_monomial_associated_primes(module: PresentedModule) -> List[Ideal]:
    """Ass(M) for a cyclic module M = S/I with I monomial, by the brute-force colon search.

    :raise UnsupportedError: for modules that are not of this shape
    """

    lifted = module.over_ambient()
    if lifted.mu() != 1:
        raise UnsupportedError(f"{module.provenance} is not cyclic")
    return monomial_associated_primes(lifted.annihilator())


def hidden_primes(module: PresentedModule) -> List[Ideal]:
    """Primes among the minimal primes of the Ext family of M over S that are not associated to M.

    Empty for Cohen-Macaulay monomial modules.

    :raise UnsupportedError: when an annihilator is not monomial or M is not a cyclic monomial module
    """

    oracle = ass_oracle(module)
    if not oracle.complete:
        raise UnsupportedError(f"non-monomial Ext annihilators at indices {oracle.unsupported}")

    associated = {tuple(str(g) for g in p.generators) for p in cyclic_monomial_associated_primes(module)}
    return [record.prime for record in oracle.primes if record.key not in associated]


def ass_containment(module: PresentedModule) -> dict:
    """Ass(M) ⊆ union of Min(Ann Ext^i_S(M, S)), with equality expected for Cohen-Macaulay M."""

    oracle = ass_oracle(module)
    associated = {tuple(str(g) for g in p.generators) for p in cyclic_monomial_associated_primes(module)}
    union = set(oracle.prime_keys())
    cohen_macaulay = is_cohen_macaulay(module.over_ambient())
    contained = associated <= union
    return {
        'contained': contained,
        'cohen_macaulay': cohen_macaulay,
        'equal': associated == union,
        'holds': contained and (associated == union or not cohen_macaulay),
        'complete': oracle.complete,
    }
