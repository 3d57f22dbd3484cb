"""Finitely presented graded modules: cokernels of homogeneous maps of free modules."""

import threading
from typing import List, Optional, Sequence

from extscope.complexes.free_module import FreeModule, ModuleMap
from extscope.complexes.resolution import Resolution, free_resolution
from extscope.errors import UsageError
from extscope.groebner.ideal import Ideal
from extscope.groebner.operations import minimal_generators, module_quotient, syzygies
from extscope.groebner.submodule import SubmoduleOfFree
from extscope.poly.polynomial import Polynomial
from extscope.poly.ring import RingSpec


def prune_constants(presentation: ModuleMap) -> ModuleMap:
    """Remove generators killed by relations with a nonzero constant entry.

    Pivoting on a unit entry a_ij deletes row i and column j and replaces every other entry by
    a_kl - a_kj * a_il / a_ij. When no unit entry is left every entry lies in the maximal ideal, so the
    remaining rows are a minimal generating set.
    """

    ring = presentation.ring
    rows: List[List[Polynomial]] = [list(row) for row in presentation.rows]
    target_twists = list(presentation.target.twists)
    source_twists = list(presentation.source.twists)

    while True:
        pivot = next(((i, j) for i, row in enumerate(rows) for j, entry in enumerate(row)
                      if entry and entry.is_constant()), None)
        if pivot is None:
            break

        i, j = pivot
        inverse = ring.field.one / rows[i][j].leading_coefficient
        for k, row in enumerate(rows):
            if k == i or not row[j]:
                continue
            factor = row[j].scale(inverse)
            for l in range(len(row)):
                if l != j and rows[i][l]:
                    row[l] = ring.reduce(row[l] - factor * rows[i][l])

        del rows[i]
        del target_twists[i]
        for row in rows:
            del row[j]
        del source_twists[j]

    keep = [j for j in range(len(source_twists)) if any(row[j] for row in rows)]
    columns = [tuple(row[j] for row in rows) for j in keep]
    return ModuleMap(FreeModule(ring, tuple(source_twists[j] for j in keep)), FreeModule(ring, tuple(target_twists)),
                     columns)


class PresentedModule:
    """M = coker(A: F_1 -> F_0) over R.

    Derived data (minimal presentation, annihilator, resolution) is computed on first use under a lock
    and cached.

    :param presentation: The map A
    :param provenance: Free-form label saying where the module came from
    """

    def __init__(self, presentation: ModuleMap, provenance: str = 'input'):
        self.__presentation = presentation
        self.__provenance = provenance
        self.__lock = threading.RLock()
        self.__minimal: Optional[ModuleMap] = None
        self.__relations: Optional[SubmoduleOfFree] = None
        self.__annihilator: Optional[Ideal] = None
        self.__resolution: Optional[Resolution] = None

    @classmethod
    def cyclic(cls, ideal: Ideal, provenance: Optional[str] = None) -> 'PresentedModule':
        """R/I."""

        ring = ideal.ring
        generators = ideal.generators
        source = FreeModule(ring, tuple(g.homogeneous_degree() for g in generators))
        presentation = ModuleMap(source, FreeModule(ring, (0,)), [(g,) for g in generators])
        return cls(presentation, provenance or f"R/{ideal}")

    @classmethod
    def free(cls, ring: RingSpec, twists: Sequence[int] = (0,)) -> 'PresentedModule':
        target = FreeModule(ring, tuple(twists))
        return cls(ModuleMap(FreeModule(ring, ()), target, []), f"free of rank {len(target.twists)}")

    @classmethod
    def zero(cls, ring: RingSpec) -> 'PresentedModule':
        return cls(ModuleMap(FreeModule(ring, ()), FreeModule(ring, ()), []), 'zero')

    @classmethod
    def from_ideal(cls, ideal: Ideal, provenance: Optional[str] = None) -> 'PresentedModule':
        """The ideal I itself as a module: minimal generators modulo their relations."""

        ring = ideal.ring
        generators = minimal_generators(ideal.module)
        relations = syzygies(generators)
        target = FreeModule(ring, tuple(generators.degrees))
        source = FreeModule(ring, tuple(relations.degrees))
        return cls(ModuleMap(source, target, relations.generators), provenance or f"ideal {ideal}")

    @classmethod
    def from_submodule(cls, module: SubmoduleOfFree, provenance: str = 'quotient') -> 'PresentedModule':
        """F/U for a submodule U of the free module F."""

        ring = module.ring
        presentation = ModuleMap(FreeModule(ring, tuple(module.degrees)), FreeModule(ring, module.twists),
                                 module.generators)
        return cls(presentation, provenance)

    @classmethod
    def from_matrix(
        cls, ring: RingSpec, rows: Sequence[Sequence[Polynomial]], target_twists: Optional[Sequence[int]] = None
    ) -> 'PresentedModule':
        return cls(ModuleMap.from_rows(ring, rows, target_twists), 'matrix')

    @property
    def ring(self) -> RingSpec:
        return self.__presentation.ring

    @property
    def presentation(self) -> ModuleMap:
        return self.__presentation

    @property
    def generators(self) -> FreeModule:
        return self.__presentation.target

    @property
    def provenance(self) -> str:
        return self.__provenance

    def relations(self) -> SubmoduleOfFree:
        """Image of the presentation inside F_0; its Groebner basis includes J F_0."""

        with self.__lock:
            if self.__relations is None:
                self.__relations = self.__presentation.image()
            return self.__relations

    def minimal_presentation(self) -> ModuleMap:
        with self.__lock:
            if self.__minimal is None:
                self.__minimal = prune_constants(self.__presentation)
            return self.__minimal

    def mu(self) -> int:
        """Minimal number of generators."""
        return self.minimal_presentation().target.rank

    def is_zero(self) -> bool:
        """M = 0 exactly when pruning removes every generator (equivalently Ann M = R)."""
        return self.mu() == 0

    def annihilator(self) -> Ideal:
        """Ann M = intersection over generators e_i of (Im A : e_i)."""

        with self.__lock:
            if self.__annihilator is None:
                minimal = self.minimal_presentation()
                if minimal.target.rank == 0:
                    self.__annihilator = Ideal.unit(self.ring)
                else:
                    image = minimal.image().nonzero()
                    target = minimal.target
                    basis = SubmoduleOfFree(self.ring, target.twists, target.basis(), target.twists)
                    self.__annihilator = module_quotient(image, basis)
            return self.__annihilator

    def resolution(self, up_to: int, minimal: bool = True) -> Resolution:
        """Minimal resolution computed at least up to F_up_to; the longest one computed is cached."""

        if not minimal:
            return free_resolution(self, up_to, minimal=False)

        with self.__lock:
            cached = self.__resolution
            if cached is not None and (cached.is_complete or cached.truncated_at >= up_to):
                return cached
            self.__resolution = free_resolution(self, up_to)
            return self.__resolution

    def betti(self, up_to: int) -> List[int]:
        return self.resolution(up_to).betti()

    def hilbert_series(self):
        """Hilbert series from the leading terms of the relations."""

        from extscope.invariants.hilbert import hilbert_series  # pylint: disable=import-outside-toplevel
        return hilbert_series(self)

    def direct_sum(self, other: 'PresentedModule') -> 'PresentedModule':
        if other.ring != self.ring:
            raise UsageError("direct sum of modules over different rings")

        a, b = self.__presentation, other.presentation
        zero = self.ring.zero
        columns = [tuple(column) + (zero,) * b.target.rank for column in a.columns]
        columns += [(zero,) * a.target.rank + tuple(column) for column in b.columns]
        presentation = ModuleMap(
            FreeModule(self.ring, a.source.twists + b.source.twists),
            FreeModule(self.ring, a.target.twists + b.target.twists),
            columns,
        )
        return PresentedModule(presentation, f"{self.__provenance} + {other.provenance}")

    def over_ambient(self) -> 'PresentedModule':
        """M regarded as a module over S: the presentation plus the columns g e_i for g in J."""

        ring = self.ring
        if ring.is_polynomial_ring:
            return self
        ambient = ring.ambient
        a = self.__presentation
        rank = a.target.rank
        columns = [tuple(e for e in column) for column in a.columns]
        twists = list(a.source.twists)
        zero = ambient.zero
        for generator in ring.quotient_ideal:
            degree = generator.homogeneous_degree()
            for i in range(rank):
                columns.append(tuple(generator if k == i else zero for k in range(rank)))
                twists.append(degree + a.target.twists[i])
        presentation = ModuleMap(FreeModule(ambient, tuple(twists)), FreeModule(ambient, a.target.twists), columns)
        return PresentedModule(presentation, f"{self.__provenance} over {ambient}")

    def __str__(self) -> str:
        return f"coker {self.__presentation} ({self.__provenance})"

    def to_json(self) -> dict:
        return {'provenance': self.__provenance, 'presentation': self.__presentation.to_json()}
