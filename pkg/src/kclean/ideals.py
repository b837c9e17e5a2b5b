"""Monomial ideal arithmetic on canonical minimal generating sets.

An ideal is identified with the unique minimal (divisibility-antichain)
set of generator exponent vectors, kept in canonical sorted order, so
equality of ideals is equality of dataclasses.  The zero ideal has no
generators; the unit ideal is generated by the zero vector.

Associated primes are read off the maximal elements of the complement
of the ideal in exponent space: each irredundant irreducible component
(x_j^{a_j} : j in J) contributes the element with a_j - 1 on J and INF
elsewhere, and the finite coordinates of those elements are exactly the
variable sets of Ass.  The brute-force cross-check lives in
:mod:`kclean.oracles`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exponents import (
    INF,
    Vec,
    fpt,
    add,
    join,
    leq,
    supp,
    unit_vector,
    validate,
    zero,
)

__all__ = [
    "MonomialIdeal",
    "MonomialPrime",
    "minimize",
    "contains",
    "colon",
    "add_principal",
    "radical",
    "is_prime",
    "intersection",
    "irreducible_decomposition",
    "maximal_complement_elements",
    "ass",
    "min_primes",
    "product_disjoint",
]


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored as its canonical minimal generating set."""

    n: int
    gens: tuple

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (zero(self.n),)

    def __contains__(self, m: Vec) -> bool:
        return contains(self, m)

    @staticmethod
    def zero_ideal(n: int) -> "MonomialIdeal":
        return MonomialIdeal(n, ())

    @staticmethod
    def unit_ideal(n: int) -> "MonomialIdeal":
        return MonomialIdeal(n, (zero(n),))


@dataclass(frozen=True)
class MonomialPrime:
    """The monomial prime generated by {x_i : i in vars}; vars may be empty."""

    n: int
    vars: frozenset

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, tuple(sorted(unit_vector(self.n, i) for i in self.vars)))

    def __le__(self, other: "MonomialPrime") -> bool:
        return self.vars <= other.vars

    def __lt__(self, other: "MonomialPrime") -> bool:
        return self.vars < other.vars


def _divides(g: Vec, m: Vec) -> bool:
    return all(x <= y for x, y in zip(g, m))


def minimize(n: int, raw_gens) -> MonomialIdeal:
    """Canonical ideal from an arbitrary finite generating set.

    Drops every generator divisible by another one; the empty set gives
    the zero ideal.  INF entries are rejected: generators are monomials.
    """
    gens = set()
    for g in raw_gens:
        validate(g)
        if len(g) != n:
            raise ValueError(f"generator {g!r} has dimension {len(g)}, expected {n}")
        if any(e == INF for e in g):
            raise ValueError(f"generator {g!r} has an INF entry")
        gens.add(g)
    kept = [g for g in gens if not any(h != g and _divides(h, g) for h in gens)]
    return MonomialIdeal(n, tuple(sorted(kept)))


def contains(ideal: MonomialIdeal, m: Vec) -> bool:
    """Monomial membership: some generator divides m."""
    validate(m)
    if any(e == INF for e in m):
        raise ValueError(f"membership is for monomials; {m!r} has an INF entry")
    return any(_divides(g, m) for g in ideal.gens)


def colon(ideal: MonomialIdeal, u: Vec) -> MonomialIdeal:
    """The ideal quotient I : u for a monomial u."""
    validate(u)
    if any(e == INF for e in u):
        raise ValueError(f"colon expects a monomial, got {u!r}")
    return minimize(
        ideal.n,
        (tuple(max(x - y, 0) for x, y in zip(g, u)) for g in ideal.gens),
    )


def add_principal(ideal: MonomialIdeal, u: Vec) -> MonomialIdeal:
    """I + (u) for a nonzero monomial u."""
    validate(u)
    if all(e == 0 for e in u):
        raise ValueError("adding the unit monomial; use the unit ideal directly")
    return minimize(ideal.n, ideal.gens + (u,))


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    """Squarefree part of every generator, re-minimized."""
    return minimize(ideal.n, (tuple(min(e, 1) for e in g) for g in ideal.gens))


def is_prime(ideal: MonomialIdeal) -> MonomialPrime | None:
    """The variable set if the ideal is a monomial prime, else None.

    The zero ideal is prime with empty variable set; the unit ideal is not prime.
    """
    if ideal.is_unit:
        return None
    vars_ = set()
    for g in ideal.gens:
        pos = [i for i, e in enumerate(g) if e != 0]
        if len(pos) != 1 or g[pos[0]] != 1:
            return None
        vars_.add(pos[0])
    return MonomialPrime(ideal.n, frozenset(vars_))


def intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J via pairwise lcms of generators."""
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero_ideal(a.n)
    return minimize(a.n, (join(g, h) for g in a.gens for h in b.gens))


def _ideal_leq(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """I ⊆ J: every generator of I is a member of J."""
    return all(contains(b, g) for g in a.gens)


def irreducible_decomposition(ideal: MonomialIdeal) -> tuple:
    """The unique irredundant decomposition into pure-power ideals.

    Splits on the canonically first generator with non-singleton support:
    g = g'·g'' with g' the pure power of g's first supported variable.
    Redundant components (containing the intersection of the others) are
    pruned in canonical order; for monomial ideals the surviving set is
    unique, so the result does not depend on the pruning order.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal has no irreducible decomposition")
    if ideal.is_zero:
        return (ideal,)

    components: set[MonomialIdeal] = set()
    stack = [ideal]
    seen = set()
    while stack:
        cur = stack.pop()
        if cur in seen:
            continue
        seen.add(cur)
        split_gen = next((g for g in cur.gens if len(supp(g)) > 1), None)
        if split_gen is None:
            components.add(cur)
            continue
        i = min(supp(split_gen))
        head = tuple(split_gen[j] if j == i else 0 for j in range(cur.n))
        tail = tuple(0 if j == i else split_gen[j] for j in range(cur.n))
        stack.append(add_principal(cur, head))
        stack.append(add_principal(cur, tail))

    comps = sorted(components, key=lambda c: c.gens)
    idx = 0
    while idx < len(comps):
        others = comps[:idx] + comps[idx + 1 :]
        if others:
            inter = others[0]
            for other in others[1:]:
                inter = intersection(inter, other)
            if _ideal_leq(inter, comps[idx]):
                del comps[idx]
                continue
        idx += 1
    return tuple(comps)


def maximal_complement_elements(ideal: MonomialIdeal) -> tuple:
    """Maximal exponent vectors outside the ideal (INF entries allowed).

    One candidate per irreducible component: exponent − 1 on the
    component's variables, INF elsewhere; the candidates of the
    irredundant decomposition form an antichain, kept sorted.
    """
    if ideal.is_unit:
        return ()
    if ideal.is_zero:
        return ((INF,) * ideal.n,)
    candidates = []
    for comp in irreducible_decomposition(ideal):
        m = [INF] * ideal.n
        for g in comp.gens:
            (i,) = supp(g)
            m[i] = g[i] - 1
        candidates.append(tuple(m))
    kept = [
        m
        for m in candidates
        if not any(m != other and leq(m, other) for other in candidates)
    ]
    return tuple(sorted(kept))


@lru_cache(maxsize=65536)
def ass(ideal: MonomialIdeal) -> frozenset:
    """Associated primes of the quotient by the ideal.

    Read off the finite-coordinate patterns of the maximal elements of
    the complement (one per irredundant irreducible component).
    """
    if ideal.is_unit or ideal.is_zero:
        raise ValueError("associated primes are undefined for the zero and unit ideals")
    return frozenset(
        MonomialPrime(ideal.n, fpt(m)) for m in maximal_complement_elements(ideal)
    )


def min_primes(ideal: MonomialIdeal) -> frozenset:
    """Inclusion-minimal associated primes."""
    primes = ass(ideal)
    return frozenset(
        p for p in primes if not any(q.vars < p.vars for q in primes)
    )


def product_disjoint(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The product of two ideals supported on disjoint variable blocks."""
    if a.n != b.n:
        raise ValueError(f"ambient dimension mismatch: {a.n} vs {b.n}")
    supp_a = frozenset().union(*(supp(g) for g in a.gens)) if a.gens else frozenset()
    supp_b = frozenset().union(*(supp(g) for g in b.gens)) if b.gens else frozenset()
    if supp_a & supp_b:
        raise ValueError(f"variable blocks overlap on {sorted(supp_a & supp_b)}")
    return minimize(a.n, (add(g, h) for g in a.gens for h in b.gens))
