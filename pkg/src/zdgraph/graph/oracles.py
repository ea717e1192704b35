"""Exhaustive reference computations for small graphs (roughly n <= 10).

These share no code with the optimized searches and exist to check them.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .core import ZdGraph


def _masks(G: ZdGraph) -> list[int]:
    return G.adjacency_masks()


def _is_clique(masks, vs) -> bool:
    return all(masks[u] >> v & 1 for u, v in combinations(vs, 2))


def _is_independent(masks, vs) -> bool:
    return not any(masks[u] >> v & 1 for u, v in combinations(vs, 2))


def brute_clique_number(G: ZdGraph) -> int:
    masks = _masks(G)
    for k in range(G.n, 0, -1):
        if any(_is_clique(masks, vs) for vs in combinations(range(G.n), k)):
            return k
    return 0


def brute_independence_number(G: ZdGraph) -> int:
    masks = _masks(G)
    for k in range(G.n, 0, -1):
        if any(_is_independent(masks, vs) for vs in combinations(range(G.n), k)):
            return k
    return 0


def brute_chromatic_number(G: ZdGraph) -> int:
    """Minimum number of independent sets covering V, by recursion over subsets."""
    n = G.n
    masks = _masks(G)
    independent = [False] * (1 << n)
    for s in range(1 << n):
        vs = [v for v in range(n) if s >> v & 1]
        independent[s] = _is_independent(masks, vs)

    @lru_cache(maxsize=None)
    def chi(s: int) -> int:
        if s == 0:
            return 0
        low = s & -s
        rest = s ^ low
        best = n + 1
        sub = rest
        # every independent set containing the lowest vertex of s
        while True:
            cand = sub | low
            if independent[cand]:
                best = min(best, 1 + chi(s ^ cand))
            if sub == 0:
                break
            sub = (sub - 1) & rest
        return best

    return chi((1 << n) - 1)


def brute_vertex_connectivity(G: ZdGraph) -> int:
    n = G.n
    if n <= 1:
        return 0
    for k in range(0, n - 1):
        for cut in combinations(range(n), k):
            rest = [v for v in range(n) if v not in cut]
            if not G.induced_subgraph(rest).is_connected():
                return k
    return n - 1


def brute_automorphisms(G: ZdGraph) -> list[tuple[int, ...]]:
    edges = set(G.edges())
    found = []
    for p in permutations(range(G.n)):
        if all(tuple(sorted((p[u], p[v]))) in edges for u, v in edges):
            found.append(p)
    return found


def brute_has_induced_p4(G: ZdGraph) -> bool:
    for quad in combinations(range(G.n), 4):
        H = G.induced_subgraph(quad)
        if H.edge_count() == 3 and H.is_connected() and sorted(H.degrees()) == [1, 1, 2, 2]:
            return True
    return False
