"""Degree flattening: one squarefree variable per power of each original one.

Block j of the target ring holds t_j copies of x_j, where t_j is the
largest exponent of x_j among the generators (1 if x_j never occurs).
A generator with exponent e in x_j polarizes to the product of the
first e copies.  Facets transport blockwise: an INF coordinate fills
its block with INF; a finite value v < t_j puts 0 in slot v+1 and INF
elsewhere.  Shedding faces transport as prefix-of-ones blocks, and back
by summing each block.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ideals
from .exponents import INF, Vec, validate
from .ideals import MonomialIdeal
from .multicomplex import Multicomplex, to_ideal

__all__ = [
    "PolarizationMap",
    "polarize_ideal",
    "polarize_multicomplex",
    "transport_shedding",
    "transport_back",
]


@dataclass(frozen=True)
class PolarizationMap:
    n: int
    multiplicities: tuple

    @property
    def total(self) -> int:
        return sum(self.multiplicities)

    def offset(self, i: int) -> int:
        return sum(self.multiplicities[:i])

    def blocks(self, flat: Vec):
        """Split a target-ring vector into per-source-variable blocks."""
        pos = 0
        for t in self.multiplicities:
            yield flat[pos : pos + t]
            pos += t


def _multiplicities(ideal: MonomialIdeal) -> tuple:
    caps = [1] * ideal.n
    for g in ideal.gens:
        for i, e in enumerate(g):
            caps[i] = max(caps[i], e)
    return tuple(caps)


def polarize_ideal(ideal: MonomialIdeal) -> tuple[MonomialIdeal, PolarizationMap]:
    """The squarefree ideal with one generator per original generator."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("polarization is for proper nonzero ideals")
    pm = PolarizationMap(ideal.n, _multiplicities(ideal))
    gens = []
    for g in ideal.gens:
        flat = []
        for i, e in enumerate(g):
            flat.extend([1] * e + [0] * (pm.multiplicities[i] - e))
        gens.append(tuple(flat))
    polarized = ideals.minimize(pm.total, gens)
    if len(polarized.gens) != len(ideal.gens):
        raise AssertionError("polarization must preserve the generator count")
    return polarized, pm


def _facet_image(a: Vec, pm: PolarizationMap) -> Vec:
    flat = []
    for i, t in enumerate(pm.multiplicities):
        if a[i] == INF:
            flat.extend([INF] * t)
        elif a[i] < t:
            flat.extend(INF if j != a[i] else 0 for j in range(t))
        else:
            raise ValueError(
                f"facet {a!r} has entry {a[i]} at coordinate {i + 1}, "
                f"outside the block of size {t}"
            )
    return tuple(flat)


def polarize_multicomplex(mc: Multicomplex) -> Multicomplex:
    """Transport every facet blockwise; a bijection onto the target facets."""
    _, pm = polarize_ideal(to_ideal(mc))
    images = [_facet_image(a, pm) for a in mc.facets]
    if len(set(images)) != len(images):
        raise AssertionError("facet transport must be injective")
    return Multicomplex.generate(pm.total, images)


def transport_shedding(a: Vec, pm: PolarizationMap) -> Vec:
    """Finite face to the target ring: a block of a(i) ones, then zeros."""
    validate(a)
    if len(a) != pm.n:
        raise ValueError(f"face has dimension {len(a)}, expected {pm.n}")
    flat = []
    for i, t in enumerate(pm.multiplicities):
        e = a[i]
        if e == INF or e > t:
            raise ValueError(f"entry {e!r} at coordinate {i + 1} exceeds the block size {t}")
        flat.extend([1] * e + [0] * (t - e))
    return tuple(flat)


def transport_back(flat: Vec, pm: PolarizationMap) -> Vec:
    """Sum each block of a finite target face."""
    validate(flat)
    if len(flat) != pm.total:
        raise ValueError(f"face has dimension {len(flat)}, expected {pm.total}")
    if any(e == INF for e in flat):
        raise ValueError("transport is for finite faces")
    return tuple(sum(block) for block in pm.blocks(flat))
