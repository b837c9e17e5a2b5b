"""Wire formats: dicts matching the JSON file layouts, plus text rendering.

Exponent entries serialize as non-negative ints with INF as the string
"inf".  Ideals are {"n", "gens"}, multicomplexes {"n", "facets"} (the
full facet list on output; any generating list is accepted on input),
simplicial complexes {"vertices", "facets"} with 1-based vertex labels.
Primes render as 1-based variable lists.
"""

from __future__ import annotations

from .cleanness import FiltrationStep, IdealTree, PrimeFiltration
from .exponents import INF, Vec, parse_entry, render_entry
from .ideals import MonomialIdeal, MonomialPrime, minimize
from .multicomplex import Multicomplex, SheddingTree
from .simplicial import SimplicialComplex, SimplicialTree

__all__ = [
    "parse_vec",
    "render_vec",
    "ideal_from_dict",
    "ideal_to_dict",
    "multicomplex_from_dict",
    "multicomplex_to_dict",
    "simplicial_from_dict",
    "simplicial_to_dict",
    "detect_kind",
    "prime_to_list",
    "monomial_str",
    "ideal_str",
    "prime_str",
    "shedding_tree_to_dict",
    "simplicial_tree_to_dict",
    "ideal_tree_to_dict",
    "filtration_to_dict",
    "filtration_lines",
]


def parse_vec(entries) -> Vec:
    return tuple(parse_entry(e) for e in entries)


def render_vec(v: Vec) -> list:
    return [render_entry(e) for e in v]


def ideal_from_dict(data: dict) -> MonomialIdeal:
    n = int(data["n"])
    gens = [parse_vec(g) for g in data["gens"]]
    return minimize(n, gens)


def ideal_to_dict(ideal: MonomialIdeal) -> dict:
    return {"n": ideal.n, "gens": [render_vec(g) for g in ideal.gens]}


def multicomplex_from_dict(data: dict) -> Multicomplex:
    n = int(data["n"])
    return Multicomplex.generate(n, (parse_vec(f) for f in data["facets"]))


def multicomplex_to_dict(mc: Multicomplex) -> dict:
    return {"n": mc.n, "facets": [render_vec(f) for f in mc.facets]}


def simplicial_from_dict(data: dict) -> SimplicialComplex:
    n = int(data["vertices"])
    faces = []
    for f in data["facets"]:
        vs = [int(v) for v in f]
        if any(not (1 <= v <= n) for v in vs):
            raise ValueError(f"vertex labels in {f} must lie in 1..{n}")
        faces.append(frozenset(v - 1 for v in vs))
    return SimplicialComplex.generate(n, faces)


def simplicial_to_dict(sc: SimplicialComplex) -> dict:
    return {
        "vertices": sc.n,
        "facets": [sorted(v + 1 for v in f) for f in sc.facets],
    }


def detect_kind(data: dict) -> str:
    if "gens" in data:
        return "ideal"
    if "vertices" in data:
        return "simplicial"
    if "facets" in data and "n" in data:
        return "multicomplex"
    raise ValueError("unrecognized input: expected gens/n, facets/n or facets/vertices keys")


def prime_to_list(p: MonomialPrime) -> list:
    return sorted(i + 1 for i in p.vars)


def monomial_str(v: Vec) -> str:
    parts = []
    for i, e in enumerate(v):
        if e == 0:
            continue
        parts.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def ideal_str(ideal: MonomialIdeal) -> str:
    if ideal.is_zero:
        return "(0)"
    if ideal.is_unit:
        return "S"
    return "(" + ", ".join(monomial_str(g) for g in ideal.gens) + ")"


def prime_str(p: MonomialPrime) -> str:
    if not p.vars:
        return "(0)"
    return "(" + ", ".join(f"x{i + 1}" for i in sorted(p.vars)) + ")"


def shedding_tree_to_dict(tree: SheddingTree) -> dict:
    if tree.is_leaf:
        return {"facets": [render_vec(f) for f in tree.mc.facets]}
    return {
        "face": render_vec(tree.face),
        "link": shedding_tree_to_dict(tree.link),
        "deletion": shedding_tree_to_dict(tree.deletion),
    }


def simplicial_tree_to_dict(tree: SimplicialTree) -> dict:
    if tree.is_leaf:
        return {"facets": [sorted(v + 1 for v in f) for f in tree.sc.facets]}
    return {
        "face": sorted(v + 1 for v in tree.face),
        "link": simplicial_tree_to_dict(tree.link),
        "deletion": simplicial_tree_to_dict(tree.deletion),
    }


def ideal_tree_to_dict(tree: IdealTree) -> dict:
    if tree.is_leaf:
        out = {"ideal": [render_vec(g) for g in tree.ideal.gens]}
        if tree.ideal.is_unit:
            out["unit"] = True
        else:
            from .ideals import is_prime

            out["prime"] = prime_to_list(is_prime(tree.ideal))
        return out
    return {
        "ideal": [render_vec(g) for g in tree.ideal.gens],
        "monomial": render_vec(tree.monomial),
        "colon": ideal_tree_to_dict(tree.colon),
        "sum": ideal_tree_to_dict(tree.sum),
    }


def filtration_lines(filtration: PrimeFiltration) -> list:
    lines = []
    cur = filtration.start
    for step in filtration.steps:
        lines.append(
            f"{ideal_str(cur)} --{monomial_str(step.witness)}--> "
            f"{ideal_str(step.ideal)} : {prime_str(step.prime)}"
        )
        cur = step.ideal
    return lines


def filtration_to_dict(filtration: PrimeFiltration) -> dict:
    return {
        "start": [render_vec(g) for g in filtration.start.gens],
        "steps": [
            {
                "witness": render_vec(s.witness),
                "prime": prime_to_list(s.prime),
                "ideal": [render_vec(g) for g in s.ideal.gens],
            }
            for s in filtration.steps
        ],
        "render": filtration_lines(filtration),
    }
