"""Seeded random corpora of monomial ideals."""

from typing import List, Optional

import numpy as np

from extscope.groebner.ideal import Ideal
from extscope.poly.parser import parse_ring
from extscope.poly.polynomial import Polynomial
from extscope.poly.ring import RingSpec

MAX_EXPONENT = 3
MAX_GENERATORS = 4


def corpus_ring() -> RingSpec:
    """QQ[x,y,z], the ring of every corpus."""
    return parse_ring('QQ[x,y,z]')


def random_monomial(ring: RingSpec, rng: np.random.Generator, max_exponent: int = MAX_EXPONENT) -> Polynomial:
    """A random nonconstant monomial with exponents at most ``max_exponent``."""

    exponents = np.zeros(ring.ngens, dtype=int)
    while not exponents.any():
        exponents = rng.integers(0, max_exponent + 1, size=ring.ngens)
    return Polynomial.monomial(ring, tuple(int(e) for e in exponents))


def random_monomial_ideal(ring: RingSpec, rng: np.random.Generator, max_generators: int = MAX_GENERATORS) -> Ideal:
    """Ideal generated by 1 to ``max_generators`` random monomials, minimally generated."""

    size = int(rng.integers(1, max_generators + 1))
    return Ideal(ring, [random_monomial(ring, rng) for _ in range(size)]).minimal_generators()


def monomial_corpus(size: int, seed: int = 0, ring: Optional[RingSpec] = None) -> List[Ideal]:
    """``size`` random monomial ideals; the same seed always gives the same list."""

    ring = ring or corpus_ring()
    rng = np.random.default_rng(seed)
    return [random_monomial_ideal(ring, rng) for _ in range(size)]


def random_staircase(ring: RingSpec, rng: np.random.Generator) -> Ideal:
    """x^(a_1) y^(b_1), ..., x^(a_m) y^(b_m) in a random pair of variables with a decreasing to 0 and b increasing
    from 0: primary to the pair, hence perfect of height two with Betti numbers (1, m, m - 1)."""

    first, second = (int(v) for v in rng.choice(ring.ngens, size=2, replace=False))
    m = int(rng.integers(2, MAX_GENERATORS + 1))
    a = sorted((int(v) for v in rng.choice(np.arange(1, MAX_GENERATORS + 2), size=m - 1, replace=False)),
               reverse=True) + [0]
    b = [0] + sorted(int(v) for v in rng.choice(np.arange(1, MAX_GENERATORS + 2), size=m - 1, replace=False))

    generators = []
    for i, j in zip(a, b):
        exponents = [0] * ring.ngens
        exponents[first], exponents[second] = i, j
        generators.append(Polynomial.monomial(ring, tuple(exponents)))
    return Ideal(ring, generators)


def height_two_perfect_corpus(size: int, seed: int = 0, ring: Optional[RingSpec] = None) -> List[Ideal]:
    """(xy, xz, yz) followed by ``size - 1`` random staircases."""

    ring = ring or corpus_ring()
    rng = np.random.default_rng(seed)
    x, y, z = ring.gens[:3]
    corpus = [Ideal(ring, [x * y, x * z, y * z])] if size > 0 else []
    corpus += [random_staircase(ring, rng) for _ in range(size - 1)]
    return corpus
