"""Finite directed graphs with a symmetric undirected view."""
from __future__ import annotations

import math
from collections import deque
from typing import Any, Iterable, Sequence


class ZdGraph:
    """Directed graph on vertices ``0..n-1`` without self-loops.

    ``arcs[u]`` holds the out-neighbours of ``u``.  The undirected view joins
    ``u`` and ``v`` whenever either arc is present; every invariant in this
    package is computed on that view.  ``labels`` optionally carries one
    payload object per vertex (vertex matrices for constructed graphs).
    """

    __slots__ = ("n", "labels", "arcs", "_nbrs", "_masks")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (), labels: Sequence[Any] | None = None):
        if labels is not None and len(labels) != n:
            raise ValueError("need exactly one label per vertex")
        out = [set() for _ in range(n)]
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range")
            out[u].add(v)
        self.n = n
        self.labels = tuple(labels) if labels is not None else None
        self.arcs = tuple(frozenset(s) for s in out)
        nb = [set(s) for s in out]
        for u, s in enumerate(out):
            for v in s:
                nb[v].add(u)
        self._nbrs = tuple(frozenset(s) for s in nb)
        self._masks = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> ZdGraph:
        """Undirected graph; each edge becomes a pair of opposite arcs."""
        arcs = []
        for u, v in edges:
            arcs += [(u, v), (v, u)]
        return cls(n, arcs, labels)

    def __repr__(self) -> str:
        return f"ZdGraph(n={self.n}, edges={self.edge_count()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZdGraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs and self.labels == other.labels

    __hash__ = None

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.arcs[u]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def adjacency_masks(self) -> list[int]:
        """Undirected adjacency as one integer bitmask per vertex."""
        if self._masks is None:
            masks = []
            for s in self._nbrs:
                m = 0
                for v in s:
                    m |= 1 << v
                masks.append(m)
            self._masks = tuple(masks)
        return list(self._masks)

    def arc_list(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.arcs[u])

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self._nbrs[u] if u < v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self._nbrs) // 2

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._nbrs]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def induced_subgraph(self, vertices: Iterable[int]) -> ZdGraph:
        """Induced subgraph on ``vertices``, relabelled in the given order."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        if len(index) != len(vs):
            raise ValueError("repeated vertex")
        arcs = [(index[u], index[w]) for u in vs for w in self.arcs[u] if w in index]
        labels = [self.labels[v] for v in vs] if self.labels is not None else None
        return ZdGraph(len(vs), arcs, labels)

    def without_edge(self, u: int, v: int) -> ZdGraph:
        """Copy with both arcs between u and v removed."""
        if not self.has_edge(u, v):
            raise ValueError(f"no edge between {u} and {v}")
        arcs = [a for a in self.arc_list() if a not in ((u, v), (v, u))]
        return ZdGraph(self.n, arcs, self.labels)

    def undirected(self) -> ZdGraph:
        return ZdGraph.from_edges(self.n, self.edges(), self.labels)

    def complement(self) -> ZdGraph:
        edges = [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if v not in self._nbrs[u]]
        return ZdGraph.from_edges(self.n, edges)

    def components(self) -> list[list[int]]:
        """Connected components of the undirected view, each sorted, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                u = queue.popleft()
                for w in self._nbrs[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def component_subgraphs(self, nontrivial_only: bool = False) -> list[ZdGraph]:
        return [self.induced_subgraph(c) for c in self.components()
                if not nontrivial_only or len(c) > 1]


def components(G: ZdGraph) -> list[list[int]]:
    return G.components()


def degree_sequence(G: ZdGraph) -> tuple[int, ...]:
    return G.degree_sequence()


def girth(G: ZdGraph) -> float | int:
    """Length of a shortest cycle in the undirected view; ``math.inf`` for forests."""
    best = math.inf
    n = G.n
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# reference constructors ---------------------------------------------------

def empty(m: int) -> ZdGraph:
    """m K_1."""
    return ZdGraph(m)


def complete(m: int) -> ZdGraph:
    return ZdGraph.from_edges(m, [(u, v) for u in range(m) for v in range(u + 1, m)])


def complete_bipartite(a: int, b: int) -> ZdGraph:
    return ZdGraph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def path(m: int) -> ZdGraph:
    return ZdGraph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle(m: int) -> ZdGraph:
    return ZdGraph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def disjoint_union(*graphs: ZdGraph) -> ZdGraph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return ZdGraph.from_edges(offset, edges)


def join(G: ZdGraph, H: ZdGraph) -> ZdGraph:
    """G * H: disjoint union plus every edge between V(G) and V(H)."""
    base = disjoint_union(G, H)
    cross = [(u, G.n + v) for u in range(G.n) for v in range(H.n)]
    return ZdGraph.from_edges(base.n, base.edges() + cross)
