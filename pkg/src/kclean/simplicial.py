"""Simplicial complexes: the squarefree end of every equivalence.

Complexes are stored as inclusion-maximal facet antichains over a fixed
vertex count.  The void complex (no facets) and the complex {∅} (one
empty facet) are distinct values, and both count as simplexes for the
decomposability base case.

Vertices are 0-based here; the wire format is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import ideals
from .exponents import INF
from .ideals import MonomialIdeal
from .multicomplex import Multicomplex

__all__ = [
    "SimplicialComplex",
    "stanley_reisner",
    "stanley_reisner_inverse",
    "link_sc",
    "deletion_sc",
    "join_sc",
    "is_shedding_face_sc",
    "is_k_decomposable_sc",
    "SimplicialTree",
    "verify_simplicial_tree",
    "is_shellable_sc",
    "verify_shelling_sc",
    "to_multicomplex",
    "from_squarefree_multicomplex",
]


def _canon(facets) -> tuple:
    return tuple(sorted(set(facets), key=lambda f: (len(f), tuple(sorted(f)))))


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple  # inclusion-maximal frozensets

    @staticmethod
    def generate(n: int, faces) -> "SimplicialComplex":
        faces = [frozenset(f) for f in faces]
        for f in faces:
            if any(not (0 <= v < n) for v in f):
                raise ValueError(f"face {sorted(f)} out of range for {n} vertices")
        kept = [f for f in faces if not any(f < g for g in faces)]
        return SimplicialComplex(n, _canon(kept))

    @staticmethod
    def void(n: int) -> "SimplicialComplex":
        return SimplicialComplex(n, ())

    @staticmethod
    def empty_face(n: int) -> "SimplicialComplex":
        return SimplicialComplex(n, (frozenset(),))

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) <= 1

    def member(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def faces(self) -> set:
        out = set()
        for f in self.facets:
            fl = sorted(f)
            for r in range(len(fl) + 1):
                out.update(frozenset(c) for c in combinations(fl, r))
        return out


def stanley_reisner(sc: SimplicialComplex) -> MonomialIdeal:
    """The squarefree ideal of minimal non-faces."""
    gens = []
    for size in range(sc.n + 1):
        for combo in combinations(range(sc.n), size):
            s = frozenset(combo)
            if sc.member(s):
                continue
            if all(sc.member(s - {v}) for v in s):
                gens.append(tuple(1 if i in s else 0 for i in range(sc.n)))
    return ideals.minimize(sc.n, gens)


def stanley_reisner_inverse(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the squarefree monomials outside the ideal."""
    if any(e > 1 for g in ideal.gens for e in g):
        raise ValueError("inverse correspondence needs a squarefree ideal")
    faces = []
    for size in range(ideal.n + 1):
        for combo in combinations(range(ideal.n), size):
            vec = tuple(1 if i in combo else 0 for i in range(ideal.n))
            if not ideals.contains(ideal, vec):
                faces.append(frozenset(combo))
    return SimplicialComplex.generate(ideal.n, faces)


def _require_face(sc: SimplicialComplex, s) -> frozenset:
    s = frozenset(s)
    if not sc.member(s):
        raise ValueError(f"{sorted(s)} is not a face of the complex")
    return s


def link_sc(sc: SimplicialComplex, s) -> SimplicialComplex:
    """Faces disjoint from s whose union with s is still a face."""
    s = _require_face(sc, s)
    return SimplicialComplex.generate(
        sc.n, (f - s for f in sc.facets if s <= f)
    )


def deletion_sc(sc: SimplicialComplex, s) -> SimplicialComplex:
    """All faces not containing s."""
    s = _require_face(sc, s)
    candidates = []
    for f in sc.facets:
        if not s <= f:
            candidates.append(f)
        else:
            candidates.extend(f - {v} for v in s)
    return SimplicialComplex.generate(sc.n, candidates)


def join_sc(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join on a combined vertex set, b's vertices placed after a's."""
    shift = a.n
    return SimplicialComplex.generate(
        a.n + b.n,
        (fa | frozenset(v + shift for v in fb) for fa in a.facets for fb in b.facets),
    )


def is_shedding_face_sc(sc: SimplicialComplex, s) -> bool:
    """Woodroofe's exchange property, checked over every face containing s.

    For each face t ⊇ s and each v in s there must be a vertex w outside t
    with (t ∪ {w}) \\ {v} still a face.
    """
    s = _require_face(sc, s)
    if not s:
        raise ValueError("shedding faces are nonempty")
    containing = {f for f in sc.faces() if s <= f}
    vertices = range(sc.n)
    for t in containing:
        for v in s:
            if not any(
                w not in t and sc.member((t | {w}) - {v}) for w in vertices
            ):
                return False
    return True


@dataclass(frozen=True)
class SimplicialTree:
    """Decomposability certificate mirroring the multicomplex one."""

    sc: SimplicialComplex
    face: frozenset | None = None
    link: "SimplicialTree | None" = None
    deletion: "SimplicialTree | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.face is None


def _face_candidates(sc: SimplicialComplex, k: int) -> list:
    out = set()
    for f in sc.facets:
        fl = sorted(f)
        for size in range(1, min(len(fl), k + 1) + 1):
            out.update(frozenset(c) for c in combinations(fl, size))
    return sorted(out, key=lambda s: (len(s), tuple(sorted(s))))


def is_k_decomposable_sc(sc: SimplicialComplex, k: int) -> SimplicialTree | None:
    """Search for shedding faces of dimension at most k, memoized per query.

    Simplexes, the void complex and {∅} are accepted outright; k = -1 is
    allowed and admits only those.
    """
    if k < -1:
        raise ValueError(f"k must be at least -1, got {k}")
    memo: dict = {}

    def search(cur: SimplicialComplex) -> SimplicialTree | None:
        key = cur.facets
        if key in memo:
            return memo[key]
        if cur.is_simplex:
            result = SimplicialTree(cur)
        else:
            result = None
            for s in _face_candidates(cur, k):
                if not is_shedding_face_sc(cur, s):
                    continue
                del_tree = search(deletion_sc(cur, s))
                if del_tree is None:
                    continue
                lk_tree = search(link_sc(cur, s))
                if lk_tree is None:
                    continue
                result = SimplicialTree(cur, s, lk_tree, del_tree)
                break
        memo[key] = result
        return result

    return search(sc)


def verify_simplicial_tree(
    sc: SimplicialComplex, tree: SimplicialTree, k: int
) -> tuple[bool, str | None]:
    if tree.sc != sc:
        return False, "certificate root does not match the complex"
    if tree.is_leaf:
        if not sc.is_simplex:
            return False, f"leaf with {len(sc.facets)} facets"
        return True, None
    s = tree.face
    if len(s) > k + 1:
        return False, f"face {sorted(s)} has dimension above {k}"
    if not is_shedding_face_sc(sc, s):
        return False, f"{sorted(s)} is not a shedding face"
    for sub_tree, expected in (
        (tree.link, link_sc(sc, s)),
        (tree.deletion, deletion_sc(sc, s)),
    ):
        ok, reason = verify_simplicial_tree(expected, sub_tree, k)
        if not ok:
            return False, reason
    return True, None


def _shelling_step_ok(prefix: list, facet: frozenset) -> bool:
    """A facet may extend a partial shelling iff for every earlier facet
    some exchanged vertex lands exactly one step below the new facet."""
    if not prefix:
        return True
    singles = {
        next(iter(facet - g)) for g in prefix if len(facet - g) == 1 and not facet <= g
    }
    if any(facet <= g for g in prefix):
        return False
    return all((facet - g) & singles for g in prefix)


def is_shellable_sc(sc: SimplicialComplex) -> tuple | None:
    """First shelling order in canonical facet order, if any.

    Backtracking with a dead-prefix cache keyed by the set of used facets;
    the extension condition only looks at which facets precede, not their
    order.
    """
    facets = sc.facets
    if len(facets) <= 1:
        return facets
    dead: set = set()

    def extend(used: frozenset):
        if len(used) == len(facets):
            return []
        if used in dead:
            return None
        prefix = [facets[i] for i in sorted(used)]
        for idx, f in enumerate(facets):
            if idx in used:
                continue
            if not _shelling_step_ok(prefix, f):
                continue
            rest = extend(used | {idx})
            if rest is not None:
                return [f] + rest
        dead.add(used)
        return None

    order = extend(frozenset())
    return tuple(order) if order is not None else None


def verify_shelling_sc(sc: SimplicialComplex, order) -> tuple[bool, str | None]:
    order = [frozenset(f) for f in order]
    if sorted(order, key=lambda f: (len(f), tuple(sorted(f)))) != list(sc.facets):
        raise ValueError("order is not a permutation of the facet list")
    for j in range(1, len(order)):
        if not _shelling_step_ok(order[:j], order[j]):
            return False, f"facet {sorted(order[j])} at position {j + 1} breaks the shelling condition"
    return True, None


def to_multicomplex(sc: SimplicialComplex) -> Multicomplex:
    """Encode faces as vectors: INF on the face, 0 elsewhere."""
    return Multicomplex.generate(
        sc.n,
        (tuple(INF if i in f else 0 for i in range(sc.n)) for f in sc.facets),
    )


def from_squarefree_multicomplex(mc: Multicomplex) -> SimplicialComplex:
    faces = []
    for b in mc.facets:
        if any(e != 0 and e != INF for e in b):
            raise ValueError(f"facet {b!r} has an entry strictly between 0 and INF")
        faces.append(frozenset(i for i, e in enumerate(b) if e == INF))
    return SimplicialComplex.generate(mc.n, faces)
