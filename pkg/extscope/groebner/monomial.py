"""Monomial ideals as integer matrices: one generator exponent vector per row.

Used for Hilbert numerators of lead-term ideals and for the primes of monomial ideals.
"""

from collections import Counter
from itertools import product
from typing import Dict, FrozenSet, List, Sequence, Set

import numpy as np

from extscope.errors import UnsupportedError
from extscope.groebner.ideal import Ideal
from extscope.poly.order import Monomial


def exponent_matrix(monomials: Sequence[Monomial], ngens: int) -> np.ndarray:
    if not monomials:
        return np.zeros((0, ngens), dtype=np.int64)
    return np.array(monomials, dtype=np.int64).reshape(len(monomials), ngens)


def minimalize(A: np.ndarray) -> np.ndarray:
    """Minimal generators among the rows of A."""

    kept: List[np.ndarray] = []
    for m in sorted(A, key=lambda row: int(row.sum())):
        if all(not np.all(m >= g) for g in kept):
            kept.append(m)
    if not kept:
        return np.zeros((0, A.shape[1]), dtype=np.int64)
    return np.array(kept, dtype=np.int64)


def colon(A: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Generators of (I : x^p)."""

    if len(A) == 0:
        return A
    return minimalize(np.maximum(A - p, 0))


def add(A: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Generators of I + (x^p)."""
    return minimalize(np.vstack([A, p.reshape(1, -1)]))


def _times(left: Dict[int, int], right: Dict[int, int]) -> Dict[int, int]:
    result: Counter = Counter()
    for a, x in left.items():
        for b, y in right.items():
            result[a + b] += x * y
    return {k: v for k, v in result.items() if v}


def _combine(left: Dict[int, int], right: Dict[int, int], sign: int, shift: int) -> Dict[int, int]:
    result = Counter(left)
    for k, v in right.items():
        result[k + shift] += sign * v
    return {k: v for k, v in result.items() if v}


def _pure_numerator(A: np.ndarray, weights: np.ndarray) -> Dict[int, int]:
    """Numerator of S/(pure powers in distinct variables)."""

    numerator = {0: 1}
    for m in A:
        degree = int(m @ weights)
        numerator = _times(numerator, {0: 1, degree: -1} if degree else {})
    return numerator


def _terminal(A: np.ndarray) -> bool:
    return int(np.sum(np.count_nonzero(A, axis=1) > 1)) <= 1


def hilbert_numerator(A: np.ndarray, weights: Sequence[int]) -> Dict[int, int]:
    """Numerator N(t) of the Hilbert series N(t) / prod(1 - t^w_i) of S/I, as ``{exponent: coefficient}``.

    Pivots on the variable occurring in most mixed generators, using
    N(I) = N(I + (x_j)) + t^{w_j} N(I : x_j), until at most one generator is mixed.
    """

    weights = np.asarray(weights, dtype=np.int64)
    A = minimalize(A)

    if len(A) == 0:
        return {0: 1}
    if np.any(np.all(A == 0, axis=1)):
        return {}

    if _terminal(A):
        mixed = [m for m in A if np.count_nonzero(m) > 1]
        pure = np.array([m for m in A if np.count_nonzero(m) <= 1], dtype=np.int64).reshape(-1, A.shape[1])
        numerator = _pure_numerator(pure, weights)
        if not mixed:
            return numerator
        m = mixed[0]
        quotient = colon(pure, m)
        inner = {} if np.any(np.all(quotient == 0, axis=1)) else _pure_numerator(quotient, weights)
        return _combine(numerator, inner, -1, int(m @ weights))

    nontrivial = A[np.count_nonzero(A, axis=1) > 1]
    j = int(np.argmax(np.count_nonzero(nontrivial, axis=0)))
    p = np.zeros(A.shape[1], dtype=np.int64)
    p[j] = 1

    left = hilbert_numerator(add(A, p), weights)
    right = hilbert_numerator(colon(A, p), weights)
    return _combine(left, right, 1, int(weights[j]))


def supports(A: np.ndarray) -> List[FrozenSet[int]]:
    return [frozenset(int(i) for i in np.nonzero(m)[0]) for m in A]


def _covers(supports_: List[FrozenSet[int]], chosen: FrozenSet[int], found: Set[FrozenSet[int]]) -> None:
    uncovered = next((s for s in supports_ if not s & chosen), None)
    if uncovered is None:
        found.add(chosen)
        return
    for variable in sorted(uncovered):
        _covers(supports_, chosen | {variable}, found)


def minimal_variable_sets(A: np.ndarray) -> List[FrozenSet[int]]:
    """Minimal sets of variables meeting the support of every generator (the minimal primes of S/I)."""

    A = minimalize(A)
    found: Set[FrozenSet[int]] = set()
    _covers(supports(A), frozenset(), found)
    minimal = [c for c in found if not any(other < c for other in found)]
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


def _monomial_matrix(ideal: Ideal) -> np.ndarray:
    if not ideal.is_monomial():
        raise UnsupportedError(f"{ideal} is not a monomial ideal")
    return exponent_matrix(ideal.leading_monomials(), ideal.ring.ngens)


def _prime(ideal: Ideal, variables: FrozenSet[int]) -> Ideal:
    gens = ideal.ring.gens
    return Ideal(ideal.ring, [gens[i] for i in sorted(variables)])


def monomial_minimal_primes(ideal: Ideal) -> List[Ideal]:
    """Minimal primes of a monomial ideal (of I + J when R = S/J): ideals generated by variables.

    :raise UnsupportedError: when the ideal is not monomial
    """

    return [_prime(ideal, variables) for variables in minimal_variable_sets(_monomial_matrix(ideal))]


def monomial_associated_primes(ideal: Ideal) -> List[Ideal]:
    """Associated primes of S/I for a monomial ideal, by brute force over the colons (I : u).

    Only exponents up to the largest one of each variable matter, so the search is finite.
    """

    A = minimalize(_monomial_matrix(ideal))
    if len(A) == 0:
        return [Ideal.zero(ideal.ring)]
    if np.any(np.all(A == 0, axis=1)):
        return []

    bounds = A.max(axis=0)
    primes: Set[FrozenSet[int]] = set()
    for exponents in product(*(range(int(b) + 1) for b in bounds)):
        u = np.array(exponents, dtype=np.int64)
        if np.any(np.all(u >= A, axis=1)):
            continue
        C = colon(A, u)
        if all(np.count_nonzero(m) == 1 and int(m.sum()) == 1 for m in C):
            primes.add(frozenset(int(np.nonzero(m)[0][0]) for m in C))

    return [_prime(ideal, p) for p in sorted(primes, key=lambda c: (len(c), sorted(c)))]
