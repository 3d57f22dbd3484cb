"""Monomials as exponent tuples and the monomial orders on them."""

from dataclasses import dataclass
from typing import Sequence, Tuple

Monomial = Tuple[int, ...]

ORDERS = ('degrevlex', 'deglex', 'elimination')


def weighted_degree(monomial: Monomial, weights: Sequence[int]) -> int:
    """Sum of exponent times weight."""
    return sum(e * w for e, w in zip(monomial, weights))


@dataclass(frozen=True)
class MonomialOrder:
    """Graded monomial order.

    ``degrevlex`` and ``deglex`` compare weighted degree first. ``elimination`` compares the weighted
    degree of the first ``block`` variables, then behaves like ``degrevlex``; it is the order used to
    eliminate tag variables.
    """

    kind: str
    weights: Tuple[int, ...]
    block: int = 0

    def __post_init__(self):
        if self.kind not in ORDERS:
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, monomial: Monomial) -> tuple:
        """Sort key; larger key means larger monomial."""

        degree = weighted_degree(monomial, self.weights)

        if self.kind == 'deglex':
            return (degree, monomial)

        revlex = tuple(-e for e in reversed(monomial))

        if self.kind == 'elimination':
            return (weighted_degree(monomial[:self.block], self.weights), degree, revlex)

        return (degree, revlex)

    def degree(self, monomial: Monomial) -> int:
        return weighted_degree(monomial, self.weights)

    def compare(self, left: Monomial, right: Monomial) -> int:
        """-1, 0 or 1 as ``left`` is smaller, equal or larger than ``right``."""

        a, b = self.key(left), self.key(right)
        return (a > b) - (a < b)
