"""Brute-force reference implementations for cross-checking the fast paths.

Everything here works over an explicit truncated grid and recomputes
membership, maximality, facets, colon sets and associated primes from
raw generator data by exhaustive comparison.  No code is shared with
the fast modules beyond the exponent-vector primitives: independence is
the point, so no memoization and no pruning either.  Desk-scale inputs
only; anything larger is refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .exponents import INF, Vec, add, infpt, fpt_star, leq, sub, supp, unit_vector, zero
from .ideals import MonomialIdeal, MonomialPrime
from .multicomplex import Multicomplex

__all__ = [
    "TruncationBox",
    "oracle_ass",
    "oracle_stanley_interval",
    "oracle_decomposable",
    "oracle_pretty_k_clean",
]

_MAX_N = 3
_MAX_ENTRY = 3
_MAX_BOUND = 5


@dataclass(frozen=True)
class TruncationBox:
    """Per-coordinate caps defining the finite grid {0..B_1}x...x{0..B_n}."""

    bounds: tuple

    @staticmethod
    def for_ideal(ideal: MonomialIdeal, slack: int = 1) -> "TruncationBox":
        caps = [0] * ideal.n
        for g in ideal.gens:
            for i, e in enumerate(g):
                caps[i] = max(caps[i], e)
        return TruncationBox(tuple(c + slack for c in caps))

    @staticmethod
    def for_multicomplex(mc: Multicomplex, slack: int = 2) -> "TruncationBox":
        caps = [0] * mc.n
        for m in mc.maximal:
            for i, e in enumerate(m):
                if e != INF:
                    caps[i] = max(caps[i], e)
        return TruncationBox(tuple(c + slack for c in caps))

    def grid(self):
        return product(*(range(b + 1) for b in self.bounds))

    def clamp(self, v: Vec) -> Vec:
        return tuple(int(min(e, b)) for e, b in zip(v, self.bounds))

    def universe(self):
        """Grid points plus INF options per coordinate."""
        return product(*(list(range(b + 1)) + [INF] for b in self.bounds))


def _refuse_if_large(n: int, entries, box: TruncationBox) -> None:
    if n > _MAX_N:
        raise ValueError(f"oracle refuses instances with n > {_MAX_N}")
    finite = [e for e in entries if e != INF]
    if finite and max(finite) > _MAX_ENTRY:
        raise ValueError(f"oracle refuses entries above {_MAX_ENTRY}")
    if max(box.bounds) > _MAX_BOUND:
        raise ValueError(f"oracle refuses boxes above {_MAX_BOUND}")


# ---------------------------------------------------------------------------
# ideals as upward-closed subsets of the grid


def _member_set(gens, box: TruncationBox) -> frozenset:
    return frozenset(u for u in box.grid() if any(leq(g, u) for g in gens))


def _colon_set(members: frozenset, u: Vec, box: TruncationBox) -> frozenset:
    return frozenset(m for m in box.grid() if box.clamp(add(u, m)) in members)


def _sum_set(members: frozenset, u: Vec, box: TruncationBox) -> frozenset:
    return members | frozenset(m for m in box.grid() if leq(u, m))


def _prime_vars(members: frozenset, box: TruncationBox, n: int) -> frozenset | None:
    """The variable set if the upward-closed set is a monomial prime."""
    if zero(n) in members:
        return None
    vars_ = frozenset(i for i in range(n) if unit_vector(n, i) in members)
    expected = frozenset(
        m for m in box.grid() if any(m[i] > 0 for i in vars_)
    )
    return vars_ if members == expected else None


def _ass_sets(members: frozenset, box: TruncationBox, n: int) -> frozenset:
    out = set()
    for u in box.grid():
        if u in members:
            continue
        vars_ = _prime_vars(_colon_set(members, u, box), box, n)
        if vars_ is not None:
            out.add(vars_)
    return frozenset(out)


def oracle_ass(ideal: MonomialIdeal, box: TruncationBox) -> frozenset:
    """Associated primes as the prime colon ideals over grid monomials."""
    if ideal.is_unit or ideal.is_zero:
        raise ValueError("associated primes are undefined for the zero and unit ideals")
    _refuse_if_large(ideal.n, (e for g in ideal.gens for e in g), box)
    members = _member_set(ideal.gens, box)
    return frozenset(
        MonomialPrime(ideal.n, vars_) for vars_ in _ass_sets(members, box, ideal.n)
    )


# ---------------------------------------------------------------------------
# multicomplexes as generator lists over a truncated universe


def _mc_member(gens, u: Vec) -> bool:
    return any(leq(u, g) for g in gens)


def _mc_maximal(gens, box: TruncationBox):
    faces = [u for u in box.universe() if _mc_member(gens, u)]
    return tuple(
        sorted(
            u
            for u in faces
            if not any(u != v and leq(u, v) for v in faces)
        )
    )


def _mc_facets(gens, box: TruncationBox):
    maximal = _mc_maximal(gens, box)
    faces = [u for u in box.universe() if _mc_member(gens, u)]
    return tuple(
        sorted(
            u
            for u in faces
            if all(infpt(m) == infpt(u) for m in maximal if leq(u, m))
        )
    )


def _mc_deletion_gens(gens, a: Vec, box: TruncationBox):
    faces = [
        u for u in box.universe() if _mc_member(gens, u) and not leq(a, u)
    ]
    return tuple(
        sorted(
            u
            for u in faces
            if not any(u != v and leq(u, v) for v in faces)
        )
    )


def _mc_link_gens(gens, a: Vec, box: TruncationBox):
    faces = [u for u in box.universe() if _mc_member(gens, add(a, u))]
    return tuple(
        sorted(
            u
            for u in faces
            if not any(u != v and leq(u, v) for v in faces)
        )
    )


def _stanley_sets_equal(gens, a: Vec, b: Vec, box: TruncationBox) -> bool:
    actual = frozenset(
        u
        for u in box.grid()
        if leq(u, b) and not (_mc_member(gens, u) and not leq(a, u))
    )
    expected = frozenset(
        u
        for u in box.grid()
        if leq(a, u) and supp(sub(u, a)) <= infpt(b)
    )
    return actual == expected


def oracle_stanley_interval(
    mc: Multicomplex, a: Vec, b: Vec, box: TruncationBox
) -> bool:
    """Literal set comparison of the interval against a + ⟨m⟩ inside the box."""
    _refuse_if_large(mc.n, (e for m in mc.maximal for e in m), box)
    return _stanley_sets_equal(mc.maximal, a, b, box)


def _mc_shedding(gens, a: Vec, box: TruncationBox) -> bool:
    star_facets = [b for b in _mc_facets(gens, box) if leq(a, b)]
    for b in star_facets:
        if not _stanley_sets_equal(gens, a, b, box):
            return False
    del_facets = _mc_facets(_mc_deletion_gens(gens, a, box), box)
    for b in star_facets:
        pat = infpt(b)
        for c in del_facets:
            if infpt(c) < pat:  # fpt(b) strictly inside fpt(c)
                return False
    return True


def oracle_decomposable(mc: Multicomplex, k: int, box: TruncationBox) -> bool:
    """Exhaustive shedding-face recursion, straight from the definition."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    _refuse_if_large(mc.n, (e for m in mc.maximal for e in m), box)

    def rec(gens) -> bool:
        if len(_mc_facets(gens, box)) <= 1:
            return True
        for a in box.grid():
            if all(e == 0 for e in a):
                continue
            if len(fpt_star(a)) > k + 1:
                continue
            if not _mc_member(gens, a):
                continue
            link_gens = _mc_link_gens(gens, a, box)
            if link_gens == _mc_maximal(gens, box):
                continue
            if not _mc_shedding(gens, a, box):
                continue
            if rec(link_gens) and rec(_mc_deletion_gens(gens, a, box)):
                return True
        return False

    return rec(mc.maximal)


def oracle_pretty_k_clean(ideal: MonomialIdeal, k: int, box: TruncationBox) -> bool:
    """Exhaustive pretty-cleaner recursion on upward-closed grid sets."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    _refuse_if_large(ideal.n, (e for g in ideal.gens for e in g), box)
    n = ideal.n

    def rec(members: frozenset) -> bool:
        if zero(n) in members:
            return True  # unit ideal: chain terminator
        if _prime_vars(members, box, n) is not None or not members:
            return True
        for u in box.grid():
            if all(e == 0 for e in u):
                continue
            if len(supp(u)) > k + 1:
                continue
            if u in members:
                continue
            quotient = _colon_set(members, u, box)
            if quotient == members:
                continue
            total = _sum_set(members, u, box)
            quotient_ass = _ass_sets(quotient, box, n)
            total_ass = _ass_sets(total, box, n)
            if any(p < q for p in quotient_ass for q in total_ass):
                continue
            if rec(quotient) and rec(total):
                return True
        return False

    return rec(_member_set(ideal.gens, box))
