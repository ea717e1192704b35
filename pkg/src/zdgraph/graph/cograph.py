"""Cograph recognition, two ways, plus a canonical cotree."""
from __future__ import annotations

from .core import ZdGraph


def find_induced_p4(G: ZdGraph) -> tuple[int, int, int, int] | None:
    """An induced path a-b-c-d, found by scanning every edge as the middle edge."""
    for b, c in G.edges():
        for mid_b, mid_c in ((b, c), (c, b)):
            Nb, Nc = G.neighbors(mid_b), G.neighbors(mid_c)
            ends_b = [a for a in Nb if a != mid_c and a not in Nc]
            ends_c = [d for d in Nc if d != mid_b and d not in Nb]
            for a in ends_b:
                Na = G.neighbors(a)
                for d in ends_c:
                    if d != a and d not in Na:
                        return (a, mid_b, mid_c, d)
    return None


def is_cograph(G: ZdGraph) -> bool:
    return find_induced_p4(G) is None


def _co_components(G: ZdGraph, vs: list[int]) -> list[list[int]]:
    """Components of the complement of G[vs]."""
    remaining = set(vs)
    comps = []
    while remaining:
        s = min(remaining)
        remaining.discard(s)
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            non_nbrs = [w for w in remaining if w not in G.neighbors(u)]
            for w in non_nbrs:
                remaining.discard(w)
                comp.append(w)
                stack.append(w)
        comps.append(sorted(comp))
    return comps


def _components(G: ZdGraph, vs: list[int]) -> list[list[int]]:
    remaining = set(vs)
    comps = []
    while remaining:
        s = min(remaining)
        remaining.discard(s)
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if w in remaining:
                    remaining.discard(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def cotree(G: ZdGraph, vs: list[int] | None = None):
    """Canonical cotree as nested tuples, or None if G is not a cograph.

    Two cographs are isomorphic exactly when their canonical cotrees are equal.
    """
    if vs is None:
        vs = list(range(G.n))
    if len(vs) == 1:
        return ("v",)
    if not vs:
        return ("empty",)
    parts = _components(G, vs)
    kind = "union"
    if len(parts) == 1:
        parts = _co_components(G, vs)
        kind = "join"
        if len(parts) == 1:
            return None
    children = []
    for p in parts:
        sub = cotree(G, p)
        if sub is None:
            return None
        # flatten nested nodes of the same kind so the form is canonical
        if sub[0] == kind:
            children.extend(sub[1])
        else:
            children.append(sub)
    return (kind, tuple(sorted(children)))


def is_cograph_recursive(G: ZdGraph) -> bool:
    """Every induced subgraph on >= 2 vertices is disconnected or co-disconnected."""
    return cotree(G) is not None
