"""Graded free modules and the homogeneous maps between them."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from extscope.errors import InhomogeneousError, UsageError
from extscope.groebner.submodule import Column, SubmoduleOfFree, column_degree
from extscope.poly.polynomial import ANY_DEGREE, Polynomial
from extscope.poly.ring import RingSpec


@dataclass(frozen=True)
class FreeModule:
    """R^n with basis vector i of degree ``twists[i]``, written ⊕ R(-twists[i])."""

    ring: RingSpec
    twists: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'twists', tuple(int(t) for t in self.twists))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def dual(self) -> 'FreeModule':
        return FreeModule(self.ring, tuple(-t for t in self.twists))

    def tensor(self, twists: Sequence[int]) -> 'FreeModule':
        """Free module with basis (k, r), index ``k * len(twists) + r``, of degree ``self.twists[k] + twists[r]``."""
        return FreeModule(self.ring, tuple(a + b for a in self.twists for b in twists))

    def basis(self) -> List[Column]:
        zero, one = self.ring.zero, self.ring.one
        return [tuple(one if i == j else zero for i in range(self.rank)) for j in range(self.rank)]

    def __str__(self) -> str:
        if not self.twists:
            return '0'
        return ' + '.join(f"R({-t})" if t else 'R' for t in self.twists)

    def to_json(self) -> dict:
        return {'rank': self.rank, 'twists': list(self.twists)}


class ModuleMap:
    """Homogeneous degree-0 map ``source -> target`` given by its columns.

    Entry (i, j) is zero or homogeneous of degree ``source.twists[j] - target.twists[i]``; entries
    are stored in normal form modulo J.

    :param source: Source free module
    :param target: Target free module
    :param columns: One column of length ``target.rank`` per basis vector of the source
    """

    def __init__(self, source: FreeModule, target: FreeModule, columns: Sequence[Sequence[Polynomial]]):
        if source.ring != target.ring:
            raise UsageError("source and target of a map must share the ring")
        if len(columns) != source.rank:
            raise UsageError(f"{len(columns)} columns for a source of rank {source.rank}")

        ring = source.ring
        reduced = []
        for j, column in enumerate(columns):
            if len(column) != target.rank:
                raise UsageError(f"column {j} has length {len(column)}, target rank is {target.rank}")
            column = tuple(ring.reduce(entry) for entry in column)
            for i, entry in enumerate(column):
                degree = entry.homogeneous_degree()
                expected = source.twists[j] - target.twists[i]
                if degree != ANY_DEGREE and degree != expected:
                    raise InhomogeneousError(
                        f"entry ({i}, {j}) = {entry} has degree {degree}, the twists need {expected}", (degree, expected)
                    )
            reduced.append(column)

        self.__source = source
        self.__target = target
        self.__columns: Tuple[Column, ...] = tuple(reduced)

    @classmethod
    def from_rows(
        cls,
        ring: RingSpec,
        rows: Sequence[Sequence[Polynomial]],
        target_twists: Optional[Sequence[int]] = None,
        source_twists: Optional[Sequence[int]] = None,
    ) -> 'ModuleMap':
        """Build a map from its matrix; missing source twists are read off the entries (zero columns get 0)."""

        rows = [tuple(row) for row in rows]
        height = len(rows)
        width = len(rows[0]) if rows else (len(source_twists) if source_twists is not None else 0)
        if any(len(row) != width for row in rows):
            raise UsageError("ragged matrix")

        target_twists = tuple(target_twists) if target_twists is not None else (0,) * height
        columns = [tuple(rows[i][j] for i in range(height)) for j in range(width)]
        if source_twists is None:
            source_twists = []
            for column in columns:
                degree = column_degree(column, target_twists)
                source_twists.append(degree if degree is not None else 0)

        return cls(FreeModule(ring, tuple(source_twists)), FreeModule(ring, target_twists), columns)

    @classmethod
    def zero(cls, source: FreeModule, target: FreeModule) -> 'ModuleMap':
        zero = source.ring.zero
        return cls(source, target, [(zero,) * target.rank for _ in range(source.rank)])

    @classmethod
    def identity(cls, module: FreeModule) -> 'ModuleMap':
        return cls(module, module, module.basis())

    @property
    def source(self) -> FreeModule:
        return self.__source

    @property
    def target(self) -> FreeModule:
        return self.__target

    @property
    def ring(self) -> RingSpec:
        return self.__source.ring

    @property
    def columns(self) -> List[Column]:
        return list(self.__columns)

    @property
    def rows(self) -> List[Column]:
        return [tuple(column[i] for column in self.__columns) for i in range(self.__target.rank)]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.__target.rank, self.__source.rank

    def entry(self, i: int, j: int) -> Polynomial:
        return self.__columns[j][i]

    def is_zero(self) -> bool:
        return not any(any(column) for column in self.__columns)

    def image(self) -> SubmoduleOfFree:
        """Image as a submodule of the target, one generator per source basis vector."""
        return SubmoduleOfFree(self.ring, self.__target.twists, self.__columns, self.__source.twists)

    def transpose(self) -> 'ModuleMap':
        """``Hom(-, R)`` of the map: ``target* -> source*`` with negated twists."""
        return ModuleMap(self.__target.dual(), self.__source.dual(), self.rows)

    def compose(self, other: 'ModuleMap') -> 'ModuleMap':
        """``self ∘ other``."""

        if other.target != self.__source:
            raise UsageError("maps are not composable")
        zero = self.ring.zero
        columns = []
        for column in other.columns:
            result = [zero] * self.__target.rank
            for k, coefficient in enumerate(column):
                if not coefficient:
                    continue
                for i, entry in enumerate(self.__columns[k]):
                    if entry:
                        result[i] = result[i] + entry * coefficient
            columns.append(tuple(result))
        return ModuleMap(other.source, self.__target, columns)

    def tensor(self, twists: Sequence[int]) -> 'ModuleMap':
        """``self ⊗ id`` on a free module with generator degrees ``twists``: column (j, r) has ``self[i][j]``
        at row (i, r)."""

        p = len(twists)
        zero = self.ring.zero
        columns = []
        for column in self.__columns:
            for r in range(p):
                entries = [zero] * (self.__target.rank * p)
                for i, entry in enumerate(column):
                    entries[i * p + r] = entry
                columns.append(tuple(entries))
        return ModuleMap(self.__source.tensor(twists), self.__target.tensor(twists), columns)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return self.__source == other.source and self.__target == other.target and self.columns == other.columns

    def __hash__(self) -> int:
        return hash((self.__source, self.__target, self.__columns))

    def __str__(self) -> str:
        return '[' + '; '.join(', '.join(str(e) for e in row) for row in self.rows) + ']'

    def to_json(self) -> dict:
        return {
            'source_twists': list(self.__source.twists),
            'target_twists': list(self.__target.twists),
            'rows': [[str(e) for e in row] for row in self.rows],
        }
