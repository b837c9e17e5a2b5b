"""Exponent vectors over the naturals extended with infinity.

Every object in this package is built from tuples of entries in
{0, 1, 2, ...} or INF.  Finite entries are plain ints; INF is
``math.inf``, which orders above every int and absorbs addition, so the
componentwise operations below are total without any overflow tricks.

The canonical order on vectors is plain tuple comparison, which gives
lexicographic order with finite < INF in every coordinate.  All
deterministic enumeration in the package sorts by it.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Iterable, Iterator

INF = math.inf

# An exponent vector: tuple of non-negative ints, with INF allowed.
Vec = tuple

__all__ = [
    "INF",
    "Vec",
    "validate",
    "is_finite",
    "leq",
    "lt",
    "join",
    "meet",
    "add",
    "sub",
    "fpt",
    "infpt",
    "fpt_star",
    "supp",
    "degree",
    "zero",
    "unit_vector",
    "clip",
    "iter_box",
    "max_antichain",
    "parse_entry",
    "render_entry",
]


def validate(a: Vec) -> Vec:
    """Check that ``a`` is a well-formed exponent vector and return it."""
    if not isinstance(a, tuple) or len(a) < 1:
        raise ValueError(f"exponent vector must be a nonempty tuple, got {a!r}")
    for e in a:
        if e == INF:
            continue
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"entries must be non-negative ints or INF, got {e!r}")
    return a


def is_finite(a: Vec) -> bool:
    return all(e != INF for e in a)


def _check_dims(a: Vec, b: Vec) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def leq(a: Vec, b: Vec) -> bool:
    """Componentwise order: a ⪯ b.  Finite values sit below INF."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def lt(a: Vec, b: Vec) -> bool:
    return leq(a, b) and a != b


def join(a: Vec, b: Vec) -> Vec:
    """Componentwise max."""
    _check_dims(a, b)
    return tuple(x if x >= y else y for x, y in zip(a, b))


def meet(a: Vec, b: Vec) -> Vec:
    """Componentwise min."""
    _check_dims(a, b)
    return tuple(x if x <= y else y for x, y in zip(a, b))


def add(a: Vec, b: Vec) -> Vec:
    """Componentwise sum; INF absorbs."""
    _check_dims(a, b)
    return tuple(INF if (x == INF or y == INF) else x + y for x, y in zip(a, b))


def sub(b: Vec, a: Vec) -> Vec:
    """b − a for a ⪯ b with a finite; INF − finite = INF."""
    _check_dims(a, b)
    if not is_finite(a):
        raise ValueError(f"subtrahend must be finite, got {a!r}")
    if not leq(a, b):
        raise ValueError(f"cannot subtract: {a!r} is not below {b!r}")
    return tuple(INF if y == INF else y - x for x, y in zip(a, b))


def fpt(a: Vec) -> frozenset:
    """Positions with a finite entry."""
    return frozenset(i for i, e in enumerate(a) if e != INF)


def infpt(a: Vec) -> frozenset:
    """Positions holding INF."""
    return frozenset(i for i, e in enumerate(a) if e == INF)


def fpt_star(a: Vec) -> frozenset:
    """Positions with a strictly positive finite entry."""
    return frozenset(i for i, e in enumerate(a) if e != INF and e > 0)


def supp(a: Vec) -> frozenset:
    """Positions with a nonzero entry (INF counts as nonzero)."""
    return frozenset(i for i, e in enumerate(a) if e != 0)


def degree(a: Vec) -> int:
    """Total degree of a finite vector."""
    if not is_finite(a):
        raise ValueError(f"degree undefined for non-finite vector {a!r}")
    return sum(a)


def zero(n: int) -> Vec:
    return (0,) * n


def unit_vector(n: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(n))


def clip(a: Vec, i: int, cap: int) -> Vec:
    """Replace a(i) by min(a(i), cap)."""
    return tuple(min(e, cap) if j == i else e for j, e in enumerate(a))


def iter_box(bounds: Iterable[int]) -> Iterator[Vec]:
    """All finite vectors with 0 ≤ v(i) ≤ bounds[i], in lexicographic order."""
    return product(*(range(b + 1) for b in bounds))


def max_antichain(vecs: Iterable[Vec]) -> tuple:
    """The ⪯-maximal elements of a finite set of vectors, canonically sorted."""
    vs = sorted(set(vecs))
    out = [v for v in vs if not any(v != w and leq(v, w) for w in vs)]
    return tuple(out)


def parse_entry(e) -> int | float:
    """Wire format entry: a non-negative int, or the string "inf"."""
    if e == "inf":
        return INF
    if isinstance(e, bool) or not isinstance(e, int) or e < 0:
        raise ValueError(f"bad exponent entry {e!r}: expected non-negative int or \"inf\"")
    return e


def render_entry(e) -> int | str:
    return "inf" if e == INF else e
