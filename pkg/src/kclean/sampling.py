"""Seeded random instances for cross-checks and property suites."""

from __future__ import annotations

import random

from . import ideals
from .ideals import MonomialIdeal
from .multicomplex import Multicomplex
from .simplicial import SimplicialComplex


def random_ideal(
    rng: random.Random, n: int, max_exp: int = 2, max_gens: int = 4
) -> MonomialIdeal:
    """A proper nonzero monomial ideal with bounded exponents."""
    while True:
        count = rng.randint(1, max_gens)
        gens = []
        for _ in range(count):
            g = tuple(rng.randint(0, max_exp) for _ in range(n))
            if any(e > 0 for e in g):
                gens.append(g)
        if gens:
            return ideals.minimize(n, gens)


def random_monomial(rng: random.Random, n: int, max_exp: int = 2) -> tuple:
    return tuple(rng.randint(0, max_exp) for _ in range(n))


def random_multicomplex(
    rng: random.Random, n: int, max_exp: int = 2, max_gens: int = 4
) -> Multicomplex:
    from .multicomplex import from_ideal

    return from_ideal(random_ideal(rng, n, max_exp, max_gens))


def random_simplicial(
    rng: random.Random, n: int, max_facets: int = 5
) -> SimplicialComplex:
    """A complex from random nonempty vertex subsets."""
    count = rng.randint(1, max_facets)
    faces = []
    for _ in range(count):
        size = rng.randint(1, n)
        faces.append(frozenset(rng.sample(range(n), size)))
    return SimplicialComplex.generate(n, faces)
