"""Multicomplexes: downward-closed subsets of N^n with INF directions.

A multicomplex is stored by its maximal elements (a canonical
⪯-antichain), which determine the face set as a union of boxes.  The
facet list (faces whose INF-pattern matches every maximal element above
them) is derived and cached; it is the quantity most operations and the
certificates speak about.

Deletion is the set {u in the complex : a ⋠ u}.  It is computed by
clipping maximal elements one coordinate below a, never by filtering
facet lists: filtering loses faces whenever every facet sits above a,
and then the complement-ideal identities behind the deciders break.

The decomposability decider searches shedding faces in a fixed order
(fewest strictly-positive coordinates, then total degree, then
lexicographic), so certificates are deterministic.  Negative answers
mean "none within the per-coordinate search bound"; the bound is
reported alongside results at the CLI/service layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import ideals
from .exponents import (
    INF,
    Vec,
    add,
    clip,
    fpt,
    fpt_star,
    infpt,
    iter_box,
    leq,
    max_antichain,
    sub,
    supp,
    validate,
)
from .ideals import MonomialIdeal, MonomialPrime

__all__ = [
    "Multicomplex",
    "StanleySet",
    "SheddingTree",
    "ShedCheck",
    "from_ideal",
    "to_ideal",
    "star",
    "deletion",
    "link",
    "join_mc",
    "is_stanley_interval",
    "is_shedding_face",
    "shedding_bounds",
    "is_k_decomposable",
    "verify_shedding_tree",
    "is_shelling",
    "find_shelling",
]


@dataclass(frozen=True)
class Multicomplex:
    n: int
    maximal: tuple

    @staticmethod
    def generate(n: int, faces) -> "Multicomplex":
        """Smallest multicomplex containing the given faces."""
        faces = tuple(faces)
        for f in faces:
            validate(f)
            if len(f) != n:
                raise ValueError(f"face {f!r} has dimension {len(f)}, expected {n}")
        return Multicomplex(n, max_antichain(faces))

    @staticmethod
    def empty(n: int) -> "Multicomplex":
        return Multicomplex(n, ())

    @staticmethod
    def full(n: int) -> "Multicomplex":
        return Multicomplex(n, ((INF,) * n,))

    @property
    def is_empty(self) -> bool:
        return not self.maximal

    def member(self, a: Vec) -> bool:
        validate(a)
        return any(leq(a, m) for m in self.maximal)

    @cached_property
    def facets(self) -> tuple:
        """Faces whose INF-pattern matches every maximal element above them."""
        out = set()
        for m in self.maximal:
            pattern = infpt(m)
            fin = sorted(fpt(m))
            for combo in product(*(range(m[i] + 1) for i in fin)):
                a = [INF] * self.n
                for i, e in zip(fin, combo):
                    a[i] = e
                a = tuple(a)
                if all(
                    infpt(mx) == pattern for mx in self.maximal if leq(a, mx)
                ):
                    out.add(a)
        return tuple(sorted(out))

    def dim(self) -> int:
        if self.is_empty:
            raise ValueError("dimension of the empty multicomplex is undefined")
        return max(len(infpt(m)) for m in self.maximal) - 1


def from_ideal(ideal: MonomialIdeal) -> Multicomplex:
    """The multicomplex of exponent vectors outside the ideal."""
    return Multicomplex(ideal.n, ideals.maximal_complement_elements(ideal))


def _box_ideal(n: int, m: Vec) -> MonomialIdeal:
    """Monomials outside the single box below m: pure powers m(i)+1."""
    gens = []
    for i in sorted(fpt(m)):
        g = [0] * n
        g[i] = m[i] + 1
        gens.append(tuple(g))
    if not gens:
        return MonomialIdeal.zero_ideal(n)
    return ideals.minimize(n, gens)


def to_ideal(mc: Multicomplex) -> MonomialIdeal:
    """Minimal generators of the monomials outside the multicomplex."""
    if mc.is_empty:
        return MonomialIdeal.unit_ideal(mc.n)
    result = _box_ideal(mc.n, mc.maximal[0])
    for m in mc.maximal[1:]:
        result = ideals.intersection(result, _box_ideal(mc.n, m))
    return result


def _require_finite_face(a: Vec) -> None:
    validate(a)
    if any(e == INF for e in a):
        raise ValueError(f"expected a finite face, got {a!r}")


def star(mc: Multicomplex, a: Vec) -> Multicomplex:
    """Faces b with a ∨ b still in the multicomplex."""
    _require_finite_face(a)
    return Multicomplex.generate(mc.n, (m for m in mc.maximal if leq(a, m)))


def link(mc: Multicomplex, a: Vec) -> Multicomplex:
    """The star shifted down by a."""
    _require_finite_face(a)
    return Multicomplex.generate(
        mc.n, (sub(m, a) for m in mc.maximal if leq(a, m))
    )


def deletion(mc: Multicomplex, a: Vec) -> Multicomplex:
    """Faces u with a ⋠ u, i.e. u(i) < a(i) somewhere on supp(a)."""
    _require_finite_face(a)
    candidates = []
    for m in mc.maximal:
        if not leq(a, m):
            candidates.append(m)
            continue
        for i in sorted(supp(a)):
            candidates.append(clip(m, i, a[i] - 1))
    return Multicomplex.generate(mc.n, candidates)


def join_mc(g1: Multicomplex, g2: Multicomplex) -> Multicomplex:
    """Pairwise sums of faces, for complexes on disjoint variable blocks."""
    if g1.n != g2.n:
        raise ValueError(f"ambient dimension mismatch: {g1.n} vs {g2.n}")
    s1 = frozenset().union(*(supp(m) for m in g1.maximal)) if g1.maximal else frozenset()
    s2 = frozenset().union(*(supp(m) for m in g2.maximal)) if g2.maximal else frozenset()
    if s1 & s2:
        raise ValueError(f"variable blocks overlap on {sorted(s1 & s2)}")
    return Multicomplex.generate(
        g1.n, (add(m1, m2) for m1 in g1.maximal for m2 in g2.maximal)
    )


@dataclass(frozen=True)
class StanleySet:
    """A translate a + ⟨m⟩ with m supported on INF directions only."""

    degree: Vec
    directions: frozenset


def _star_facets_of(mc: Multicomplex, a: Vec) -> tuple:
    """Facets of the complex lying above a (the star's generating facets)."""
    return tuple(b for b in mc.facets if leq(a, b))


def _stanley_core(
    mc: Multicomplex, a: Vec, b: Vec, deleted: Multicomplex
) -> StanleySet | None:
    """Decide whether the faces below b and outside the deletion form a + ⟨m⟩.

    Criterion: the complement ideal of ⟨deletion, b⟩, coloned by a, must be
    exactly the prime on the finite coordinates of b.
    """
    extended = Multicomplex.generate(mc.n, deleted.facets + (b,))
    quotient = ideals.colon(to_ideal(extended), a)
    prime = ideals.is_prime(quotient)
    if prime is not None and prime.vars == fpt(b):
        return StanleySet(degree=a, directions=infpt(b))
    return None


def is_stanley_interval(mc: Multicomplex, a: Vec, b: Vec) -> StanleySet | None:
    _require_finite_face(a)
    if not mc.member(a):
        raise ValueError(f"{a!r} is not a face of the multicomplex")
    if not leq(a, b):
        raise ValueError(f"{a!r} is not below {b!r}")
    st = star(mc, a)
    if b not in st.facets:
        raise ValueError(f"{b!r} is not a facet of the star of {a!r}")
    return _stanley_core(mc, a, b, deletion(mc, a))


@dataclass(frozen=True)
class ShedCheck:
    ok: bool
    reason: str | None = None


def is_shedding_face(mc: Multicomplex, a: Vec) -> ShedCheck:
    """Both shedding conditions, with the first failure spelled out.

    (i) every facet above a spans a Stanley interval of degree exactly a
        over the deletion;
    (ii) no facet above a has its finite-coordinate set strictly inside
        that of a deletion facet.
    """
    _require_finite_face(a)
    if not mc.member(a):
        raise ValueError(f"{a!r} is not a face of the multicomplex")
    deleted = deletion(mc, a)
    star_family = _star_facets_of(mc, a)
    for b in star_family:
        if _stanley_core(mc, a, b, deleted) is None:
            return ShedCheck(
                False,
                f"interval below facet {b} is not a Stanley set of degree {a}",
            )
    for b in star_family:
        pat = fpt(b)
        for c in deleted.facets:
            cpat = fpt(c)
            if pat <= cpat and pat != cpat:
                return ShedCheck(
                    False,
                    f"finite support of star facet {b} is strictly inside "
                    f"that of deletion facet {c}",
                )
    return ShedCheck(True)


def shedding_bounds(mc: Multicomplex) -> tuple:
    """Per-coordinate candidate caps for the shedding-face search.

    Finite facet entries cap directly; coordinates where some facet is
    INF allow one step past the largest finite entry seen there.
    """
    caps = []
    for i in range(mc.n):
        finite = [b[i] for b in mc.facets if b[i] != INF]
        top = max(finite, default=0)
        if any(b[i] == INF for b in mc.facets):
            caps.append(top + 1)
        else:
            caps.append(top)
    return tuple(caps)


def _normalize_bound(mc: Multicomplex, bound) -> tuple:
    if bound is None:
        return shedding_bounds(mc)
    if isinstance(bound, int):
        return (bound,) * mc.n
    bound = tuple(bound)
    if len(bound) != mc.n:
        raise ValueError(f"bound vector has dimension {len(bound)}, expected {mc.n}")
    return bound


def _shedding_candidates(mc: Multicomplex, k: int, bound) -> list:
    cands = [
        a
        for a in iter_box(_normalize_bound(mc, bound))
        if any(e > 0 for e in a)
        and len(fpt_star(a)) <= k + 1
        and mc.member(a)
    ]
    cands.sort(key=lambda a: (len(fpt_star(a)), sum(a), a))
    return cands


@dataclass(frozen=True)
class SheddingTree:
    """Certificate of decomposability: a face and the two sub-certificates."""

    mc: Multicomplex
    face: Vec | None = None
    link: "SheddingTree | None" = None
    deletion: "SheddingTree | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.face is None

    def faces(self) -> list:
        if self.is_leaf:
            return []
        return [self.face] + self.link.faces() + self.deletion.faces()


def is_k_decomposable(mc: Multicomplex, k: int, bound=None) -> SheddingTree | None:
    """Search for a shedding-face certificate, memoized per query.

    Empty and single-facet complexes are accepted outright.  Candidates
    whose link reproduces the whole complex are skipped: a derivation
    through them would have to prove the complex decomposable as a
    subgoal of itself, so no finite certificate uses them.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    memo: dict = {}

    def search(cur: Multicomplex) -> SheddingTree | None:
        key = cur.maximal
        if key in memo:
            return memo[key]
        if len(cur.facets) <= 1:
            result = SheddingTree(cur)
        else:
            result = None
            for a in _shedding_candidates(cur, k, bound):
                lk = link(cur, a)
                if lk.maximal == cur.maximal:
                    continue
                if not is_shedding_face(cur, a).ok:
                    continue
                lk_tree = search(lk)
                if lk_tree is None:
                    continue
                del_tree = search(deletion(cur, a))
                if del_tree is None:
                    continue
                result = SheddingTree(cur, a, lk_tree, del_tree)
                break
        memo[key] = result
        return result

    return search(mc)


def verify_shedding_tree(mc: Multicomplex, tree: SheddingTree, k: int) -> ShedCheck:
    """Replay a certificate: structure, shedding checks, and the k cap."""
    if tree.mc != mc:
        return ShedCheck(False, "certificate root does not match the multicomplex")
    if tree.is_leaf:
        if len(mc.facets) > 1:
            return ShedCheck(False, f"leaf with {len(mc.facets)} facets")
        return ShedCheck(True)
    a = tree.face
    if len(fpt_star(a)) > k + 1:
        return ShedCheck(False, f"face {a} has more than {k + 1} positive coordinates")
    check = is_shedding_face(mc, a)
    if not check.ok:
        return ShedCheck(False, f"face {a}: {check.reason}")
    for sub_tree, expected in ((tree.link, link(mc, a)), (tree.deletion, deletion(mc, a))):
        res = verify_shedding_tree(expected, sub_tree, k)
        if not res.ok:
            return res
    return ShedCheck(True)


def _shelling_step(
    n: int, prev_ideal: MonomialIdeal, facet: Vec
) -> tuple[MonomialIdeal, str | None]:
    """Add one facet to the shelled-so-far complex.

    Valid iff exactly one minimal generator of the previous complement
    ideal survives outside the new one and its colon there is the prime
    on the facet's finite coordinates.
    """
    cur_ideal = ideals.intersection(prev_ideal, _box_ideal(n, facet))
    outside = [g for g in prev_ideal.gens if not ideals.contains(cur_ideal, g)]
    if len(outside) != 1:
        return cur_ideal, f"facet {facet}: added region is not a single translate"
    prime = ideals.is_prime(ideals.colon(cur_ideal, outside[0]))
    if prime is None or prime.vars != fpt(facet):
        return cur_ideal, f"facet {facet}: added region is not a Stanley set"
    return cur_ideal, None


def is_shelling(mc: Multicomplex, order) -> tuple[bool, str | None]:
    """Check a facet order against both shelling conditions."""
    order = [validate(tuple(a)) for a in order]
    if sorted(order) != list(mc.facets) or len(set(order)) != len(order):
        raise ValueError("order is not a permutation of the facet list")
    prev = MonomialIdeal.unit_ideal(mc.n)
    directions: list = []
    for idx, facet in enumerate(order):
        prev, err = _shelling_step(mc.n, prev, facet)
        if err:
            return False, err
        d = infpt(facet)
        for j, earlier in enumerate(directions):
            if earlier < d:
                return False, (
                    f"direction set of step {j + 1} is strictly inside "
                    f"that of the later step {idx + 1}"
                )
        directions.append(d)
    return True, None


def find_shelling(mc: Multicomplex) -> tuple | None:
    """First shelling order in canonical facet order, if one exists.

    Backtracking over facets with a dead-prefix cache; validity of an
    extension depends only on the set of facets already placed, so the
    cache is keyed by that set.
    """
    facets = mc.facets
    if len(facets) <= 1:
        return facets
    dead: set = set()

    def extend(used: frozenset, prev_ideal, directions):
        if len(used) == len(facets):
            return []
        if used in dead:
            return None
        for idx, facet in enumerate(facets):
            if idx in used:
                continue
            d = infpt(facet)
            if any(directions[j] < d for j in used):
                continue
            cur_ideal, err = _shelling_step(mc.n, prev_ideal, facet)
            if err:
                continue
            directions[idx] = d
            rest = extend(used | {idx}, cur_ideal, directions)
            if rest is not None:
                return [facet] + rest
        dead.add(used)
        return None

    order = extend(frozenset(), MonomialIdeal.unit_ideal(mc.n), [None] * len(facets))
    return tuple(order) if order is not None else None
