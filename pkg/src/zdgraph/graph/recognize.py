"""Structural recognition of the reference families.

Each recognizer splits vertices by degree, then checks every intra- and
cross-class pair.  No general isomorphism test is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .core import ZdGraph, complete, complete_bipartite, disjoint_union, empty, join


@dataclass(frozen=True)
class CompleteBipartite:
    """K_{a,b}."""

    a: int
    b: int

    def build(self) -> ZdGraph:
        return complete_bipartite(self.a, self.b)


@dataclass(frozen=True)
class CliqueJoinEmpty:
    """K_m * (k K_1)."""

    clique: int
    empty: int

    def build(self) -> ZdGraph:
        return join(complete(self.clique), empty(self.empty))


@dataclass(frozen=True)
class HubJoin:
    """m K_1 * (K_m u 2m K_1)."""

    m: int

    def build(self) -> ZdGraph:
        return join(empty(self.m), disjoint_union(complete(self.m), empty(2 * self.m)))


@dataclass(frozen=True)
class Isolated:
    """k K_1."""

    count: int

    def build(self) -> ZdGraph:
        return empty(self.count)


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple

    def build(self) -> ZdGraph:
        return disjoint_union(*(p.build() for p in self.parts))


def _all_adjacent(G, xs, ys) -> bool:
    return all(G.has_edge(x, y) for x, y in product(xs, ys))


def _none_adjacent(G, xs, ys) -> bool:
    return not any(G.has_edge(x, y) for x, y in product(xs, ys))


def _is_clique(G, xs) -> bool:
    return all(G.has_edge(x, y) for x, y in combinations(xs, 2))


def _is_independent(G, xs) -> bool:
    return not any(G.has_edge(x, y) for x, y in combinations(xs, 2))


def _by_degree(G: ZdGraph) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for v in range(G.n):
        out.setdefault(G.degree(v), []).append(v)
    return out


def _match_bipartite(G: ZdGraph, ref: CompleteBipartite) -> bool:
    a, b = ref.a, ref.b
    if G.n != a + b or G.edge_count() != a * b:
        return False
    if a == 0 or b == 0:
        return G.edge_count() == 0
    # 2-color the (connected) graph, then demand every cross pair
    side = [-1] * G.n
    side[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in G.neighbors(u):
            if side[w] < 0:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                return False
    if -1 in side:
        return False
    left = [v for v in range(G.n) if side[v] == 0]
    right = [v for v in range(G.n) if side[v] == 1]
    if sorted((len(left), len(right))) != sorted((a, b)):
        return False
    return _all_adjacent(G, left, right)


def _match_clique_join(G: ZdGraph, ref: CliqueJoinEmpty) -> bool:
    m, k = ref.clique, ref.empty
    if G.n != m + k or G.edge_count() != m * (m - 1) // 2 + m * k:
        return False
    if m == 0 or k <= 1:
        # degenerate: K_{m+k} or an edgeless graph
        return _is_clique(G, range(G.n)) if m else G.edge_count() == 0
    classes = _by_degree(G)
    C = classes.get(m - 1 + k, [])
    I = classes.get(m, [])
    if len(C) != m or len(I) != k:
        return False
    return _is_clique(G, C) and _is_independent(G, I) and _all_adjacent(G, C, I)


def _match_hub(G: ZdGraph, ref: HubJoin) -> bool:
    m = ref.m
    if G.n != 4 * m or G.edge_count() != m * (m - 1) // 2 + 3 * m * m:
        return False
    classes = _by_degree(G)
    H = classes.get(3 * m, [])
    if len(H) != m:
        return False
    rest = [v for v in range(G.n) if v not in set(H)]
    if not (_is_independent(G, H) and _all_adjacent(G, H, rest)):
        return False
    if m == 1:
        return _is_independent(G, rest)
    K = classes.get(2 * m - 1, [])
    I = classes.get(m, [])
    if len(K) != m or len(I) != 2 * m:
        return False
    return _is_clique(G, K) and _is_independent(G, I) and _none_adjacent(G, K, I)


def _expand_parts(parts) -> list:
    out = []
    for p in parts:
        if isinstance(p, Isolated):
            out += [Isolated(1)] * p.count
        elif isinstance(p, DisjointUnion):
            out += _expand_parts(p.parts)
        else:
            out.append(p)
    return out


def _size(ref) -> int:
    if isinstance(ref, CompleteBipartite):
        return ref.a + ref.b
    if isinstance(ref, CliqueJoinEmpty):
        return ref.clique + ref.empty
    if isinstance(ref, HubJoin):
        return 4 * ref.m
    if isinstance(ref, Isolated):
        return ref.count
    return sum(_size(p) for p in ref.parts)


def _match_union(G: ZdGraph, ref: DisjointUnion) -> bool:
    parts = _expand_parts(ref.parts)
    comps = G.components()
    if len(parts) != len(comps) or sum(map(_size, parts)) != G.n:
        return False
    subgraphs = [G.induced_subgraph(c) for c in comps]
    memo: dict[tuple[int, int], bool] = {}

    def fits(i, j):
        if (i, j) not in memo:
            memo[(i, j)] = (subgraphs[j].n == _size(parts[i])
                            and matches_reference(subgraphs[j], parts[i]))
        return memo[(i, j)]

    used = [False] * len(comps)

    def assign(i):
        if i == len(parts):
            return True
        for j in range(len(comps)):
            if not used[j] and fits(i, j):
                used[j] = True
                if assign(i + 1):
                    return True
                used[j] = False
        return False

    return assign(0)


def matches_reference(G: ZdGraph, ref) -> bool:
    """True when the undirected view of G has exactly the structure ``ref``."""
    if isinstance(ref, CompleteBipartite):
        return _match_bipartite(G, ref)
    if isinstance(ref, CliqueJoinEmpty):
        return _match_clique_join(G, ref)
    if isinstance(ref, HubJoin):
        return _match_hub(G, ref)
    if isinstance(ref, Isolated):
        return G.n == ref.count and G.edge_count() == 0
    if isinstance(ref, DisjointUnion):
        return _match_union(G, ref)
    raise TypeError(f"unknown reference family {ref!r}")
