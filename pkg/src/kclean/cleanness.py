"""Cleaner monomials, recursive cleanness deciders, prime filtrations.

A certificate is a binary ideal tree: each internal node carries a
monomial u outside its ideal I, with children I : u and I + (u); leaves
are primes (the unit ideal is also accepted, as the chain terminator).
Stacking the colon branch's filtration (witnesses multiplied by u) on
top of the sum branch's turns a tree into a prime filtration
I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = S with I_{i-1} : u_i = P_i.

Search order is fixed (fewest supported variables, then degree, then
lexicographic) and the first success is the certificate.  Candidates
whose colon leaves the ideal unchanged are skipped: every recursion
step then strictly enlarges the ideal, which is what makes the search
terminate.  Negative answers mean "no cleaner within the per-variable
exponent caps"; callers report the caps next to the answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ideals
from .exponents import INF, Vec, add, fpt_star, iter_box, supp, validate, zero
from .ideals import MonomialIdeal, MonomialPrime

__all__ = [
    "IdealTree",
    "FiltrationStep",
    "PrimeFiltration",
    "is_cleaner",
    "is_pretty_cleaner",
    "cleaner_caps",
    "is_pretty_k_clean",
    "is_k_clean",
    "verify_ideal_tree",
    "filtration_from_tree",
    "verify_filtration",
    "cleanness_length",
]


@dataclass(frozen=True)
class IdealTree:
    ideal: MonomialIdeal
    monomial: Vec | None = None
    colon: "IdealTree | None" = None
    sum: "IdealTree | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.monomial is None

    def length(self) -> int:
        """Number of cleaner monomials in the tree."""
        if self.is_leaf:
            return 0
        return 1 + self.colon.length() + self.sum.length()


def _check_candidate(ideal: MonomialIdeal, u: Vec) -> None:
    validate(u)
    if any(e == INF for e in u):
        raise ValueError(f"cleaner candidates are monomials, got {u!r}")
    if all(e == 0 for e in u):
        raise ValueError("the unit monomial cannot be a cleaner")
    if ideals.contains(ideal, u):
        raise ValueError(f"{u!r} lies in the ideal")


def is_cleaner(ideal: MonomialIdeal, u: Vec) -> bool:
    """Minimal primes of I + (u) all appear among the minimal primes of I."""
    _check_candidate(ideal, u)
    return ideals.min_primes(ideals.add_principal(ideal, u)) <= ideals.min_primes(ideal)


def _pretty_cleaner(colon_ideal: MonomialIdeal, sum_ideal: MonomialIdeal) -> bool:
    colon_ass = ideals.ass(colon_ideal)
    sum_ass = ideals.ass(sum_ideal)
    return not any(
        p.vars < q.vars for p in colon_ass for q in sum_ass
    )


def is_pretty_cleaner(ideal: MonomialIdeal, u: Vec) -> bool:
    """No prime of I : u sits strictly inside a prime of I + (u)."""
    _check_candidate(ideal, u)
    return _pretty_cleaner(ideals.colon(ideal, u), ideals.add_principal(ideal, u))


def cleaner_caps(ideal: MonomialIdeal) -> tuple:
    """Per-variable exponent caps: the largest power of each variable
    appearing among the generators."""
    caps = [0] * ideal.n
    for g in ideal.gens:
        for i, e in enumerate(g):
            caps[i] = max(caps[i], e)
    return tuple(caps)


def _normalize_caps(ideal: MonomialIdeal, bound) -> tuple:
    if bound is None:
        return cleaner_caps(ideal)
    if isinstance(bound, int):
        return (bound,) * ideal.n
    bound = tuple(bound)
    if len(bound) != ideal.n:
        raise ValueError(f"bound vector has dimension {len(bound)}, expected {ideal.n}")
    return bound


def _candidates(ideal: MonomialIdeal, k: int, bound) -> list:
    cands = [
        u
        for u in iter_box(_normalize_caps(ideal, bound))
        if any(e > 0 for e in u)
        and len(supp(u)) <= k + 1
        and not ideals.contains(ideal, u)
    ]
    cands.sort(key=lambda u: (len(supp(u)), sum(u), u))
    return cands


def _search(ideal: MonomialIdeal, k: int, bound, pretty: bool) -> IdealTree | None:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    memo: dict = {}

    def rec(cur: MonomialIdeal) -> IdealTree | None:
        if cur in memo:
            return memo[cur]
        if cur.is_unit or ideals.is_prime(cur) is not None:
            memo[cur] = IdealTree(cur)
            return memo[cur]
        result = None
        if pretty or ideals.ass(cur) == ideals.min_primes(cur):
            for u in _candidates(cur, k, bound):
                quotient = ideals.colon(cur, u)
                if quotient == cur:
                    continue
                total = ideals.add_principal(cur, u)
                if pretty:
                    if not _pretty_cleaner(quotient, total):
                        continue
                elif not ideals.min_primes(total) <= ideals.min_primes(cur):
                    continue
                left = rec(quotient)
                if left is None:
                    continue
                right = rec(total)
                if right is None:
                    continue
                result = IdealTree(cur, u, left, right)
                break
        memo[cur] = result
        return result

    return rec(ideal)


def is_pretty_k_clean(ideal: MonomialIdeal, k: int, bound=None) -> IdealTree | None:
    """Certificate tree built from pretty cleaner monomials on at most
    k+1 variables, or None if none exists within the caps."""
    return _search(ideal, k, bound, pretty=True)


def is_k_clean(ideal: MonomialIdeal, k: int, bound=None) -> IdealTree | None:
    """As the pretty variant, but with plain cleaner monomials and the
    no-embedded-primes requirement at every non-prime node."""
    return _search(ideal, k, bound, pretty=False)


def verify_ideal_tree(
    ideal: MonomialIdeal, tree: IdealTree, k: int, mode: str = "pretty_clean"
) -> tuple[bool, str | None]:
    """Replay a certificate without searching."""
    if mode not in ("pretty_clean", "clean"):
        raise ValueError(f"unknown mode {mode!r}")
    if tree.ideal != ideal:
        return False, "certificate root does not match the ideal"
    if tree.is_leaf:
        if ideal.is_unit or ideals.is_prime(ideal) is not None:
            return True, None
        return False, f"leaf ideal {ideal.gens} is neither prime nor the unit ideal"
    u = tree.monomial
    if len(supp(u)) > k + 1:
        return False, f"monomial {u} is supported on more than {k + 1} variables"
    if ideals.contains(ideal, u):
        return False, f"monomial {u} lies in its node ideal"
    quotient = ideals.colon(ideal, u)
    total = ideals.add_principal(ideal, u)
    if mode == "pretty_clean":
        if not _pretty_cleaner(quotient, total):
            return False, f"monomial {u} is not a pretty cleaner"
    else:
        if ideals.ass(ideal) != ideals.min_primes(ideal):
            return False, "node ideal has an embedded prime"
        if not ideals.min_primes(total) <= ideals.min_primes(ideal):
            return False, f"monomial {u} is not a cleaner"
    for sub_tree, expected in ((tree.colon, quotient), (tree.sum, total)):
        ok, reason = verify_ideal_tree(expected, sub_tree, k, mode)
        if not ok:
            return False, reason
    return True, None


@dataclass(frozen=True)
class FiltrationStep:
    witness: Vec
    prime: MonomialPrime
    ideal: MonomialIdeal  # the chain ideal after adding the witness


@dataclass(frozen=True)
class PrimeFiltration:
    start: MonomialIdeal
    steps: tuple


def filtration_from_tree(tree: IdealTree) -> PrimeFiltration:
    """Stack the colon branch (witnesses shifted by the node monomial)
    on top of the sum branch, recursively; a prime leaf contributes the
    single step with witness 1."""
    n = tree.ideal.n

    def witnesses(t: IdealTree) -> list:
        if t.is_leaf:
            if t.ideal.is_unit:
                return []
            prime = ideals.is_prime(t.ideal)
            if prime is None:
                raise ValueError(f"malformed tree: leaf {t.ideal.gens} is not prime")
            return [(zero(n), prime)]
        shifted = [(add(t.monomial, w), p) for w, p in witnesses(t.colon)]
        return shifted + witnesses(t.sum)

    steps = []
    cur = tree.ideal
    for w, p in witnesses(tree):
        cur = ideals.minimize(n, cur.gens + (w,))
        steps.append(FiltrationStep(w, p, cur))
    return PrimeFiltration(tree.ideal, tuple(steps))


def verify_filtration(
    ideal: MonomialIdeal, filtration: PrimeFiltration, mode: str = "pretty_clean"
) -> tuple[bool, str | None]:
    """Check chain algebra plus the mode's ordering/support condition.

    pretty_clean: no prime strictly inside a later one.
    clean: the set of primes equals the minimal primes of the ideal.
    """
    if mode not in ("pretty_clean", "clean"):
        raise ValueError(f"unknown mode {mode!r}")
    if filtration.start != ideal:
        return False, "filtration starts at the wrong ideal"
    cur = ideal
    primes = []
    for idx, step in enumerate(filtration.steps, start=1):
        grown = ideals.minimize(ideal.n, cur.gens + (step.witness,))
        if grown != step.ideal:
            return False, f"step {idx}: ideal is not the previous one plus the witness"
        if cur == step.ideal:
            return False, f"step {idx}: witness does not enlarge the ideal"
        if ideals.colon(cur, step.witness) != step.prime.as_ideal():
            return False, f"step {idx}: colon by the witness is not the stated prime"
        primes.append(step.prime)
        cur = step.ideal
    if not cur.is_unit:
        return False, "chain does not end at the unit ideal"
    if mode == "pretty_clean":
        for i in range(len(primes)):
            for j in range(i + 1, len(primes)):
                if primes[i].vars < primes[j].vars:
                    return False, (
                        f"prime at step {i + 1} sits strictly inside the one at step {j + 1}"
                    )
    else:
        if ideal.is_unit:
            if primes:
                return False, "the unit ideal admits only the empty filtration"
        elif set(primes) != set(ideals.min_primes(ideal)):
            return False, "support differs from the minimal primes"
    return True, None


def cleanness_length(ideal: MonomialIdeal, k: int, bound=None) -> int | None:
    """Fewest cleaner monomials over all pretty certificates within the
    caps; an upper bound for the true minimum, None if not decidable
    positively within the caps."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    memo: dict = {}

    def rec(cur: MonomialIdeal) -> int | None:
        if cur in memo:
            return memo[cur]
        if cur.is_unit or ideals.is_prime(cur) is not None:
            memo[cur] = 0
            return 0
        best = None
        for u in _candidates(cur, k, bound):
            quotient = ideals.colon(cur, u)
            if quotient == cur:
                continue
            total = ideals.add_principal(cur, u)
            if not _pretty_cleaner(quotient, total):
                continue
            left = rec(quotient)
            if left is None:
                continue
            right = rec(total)
            if right is None:
                continue
            cost = 1 + left + right
            if best is None or cost < best:
                best = cost
        memo[cur] = best
        return best

    return rec(ideal)
