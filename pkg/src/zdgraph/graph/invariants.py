"""Exact graph invariants on the undirected view."""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .. import kernels
from ..errors import ResourceBudgetExceeded
from .cograph import is_cograph
from .core import ZdGraph, girth
from .planarity import is_planar

CHROMATIC_BUDGET = 10**7
CLIQUE_BUDGET = 10**7


def greedy_coloring(G: ZdGraph) -> list[int]:
    """DSATUR greedy coloring; colors are 0-based."""
    n = G.n
    color = [-1] * n
    seen = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (len(seen[u]), G.degree(u), -u))
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for w in G.neighbors(v):
            seen[w].add(c)
    return color


def clique_number(G: ZdGraph, budget: int = CLIQUE_BUDGET) -> int:
    if G.n == 0:
        return 0
    size, nodes = kernels.max_clique(G.adjacency_masks(), budget)
    if size < 0:
        raise ResourceBudgetExceeded(f"clique search exceeded {budget} nodes", budget)
    return size


def independence_number(G: ZdGraph, budget: int = CLIQUE_BUDGET) -> int:
    return clique_number(G.complement(), budget)


def chromatic_number(G: ZdGraph, budget: int = CHROMATIC_BUDGET) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, then branch and bound."""
    if G.n == 0:
        return 0
    lower = clique_number(G)
    upper = max(greedy_coloring(G)) + 1
    if lower == upper:
        return upper
    chi, nodes = kernels.chromatic(G.adjacency_masks(), lower, upper, budget)
    if chi < 0:
        raise ResourceBudgetExceeded(f"coloring search exceeded {budget} nodes", budget,
                                     partial=(lower, upper))
    return chi


def _local_connectivity(G: ZdGraph, s: int, t: int, cap: int) -> int:
    """Max number of internally disjoint s-t paths (s, t non-adjacent), stopping at ``cap``.

    Unit-capacity max flow on the split graph: vertex v becomes v_in = 2v and
    v_out = 2v + 1 joined by a capacity-1 arc (infinite for s and t).
    """
    n = G.n
    flow: dict[tuple[int, int], int] = {}
    capacity: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def add(u, v, c):
        if (u, v) not in capacity:
            out[u].append(v)
            out[v].append(u)
            capacity.setdefault((v, u), 0)
        capacity[(u, v)] = capacity.get((u, v), 0) + c

    big = n
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in G.neighbors(v):
            add(2 * v + 1, 2 * w, big)
    source, sink = 2 * s + 1, 2 * t
    total = 0
    while total < cap:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v in out[u]:
                if v not in parent and capacity[(u, v)] - flow.get((u, v), 0) > 0:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            break
        v = sink
        while parent[v] is not None:
            u = parent[v]
            flow[(u, v)] = flow.get((u, v), 0) + 1
            flow[(v, u)] = flow.get((v, u), 0) - 1
            v = u
        total += 1
    return total


def vertex_connectivity(G: ZdGraph) -> int:
    """Minimum number of vertices whose removal disconnects G.

    Disconnected graphs give 0; K_m gives m - 1.  Uses Even's scheme: only
    pairs whose first vertex is among the first kappa + 1 need a flow.
    """
    n = G.n
    if n <= 1 or not G.is_connected():
        return 0
    best = G.min_degree()
    if G.edge_count() == n * (n - 1) // 2:
        return n - 1
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not G.has_edge(i, j):
                best = min(best, _local_connectivity(G, i, j, best))
        i += 1
    return best


@dataclass
class PerfectnessCheck:
    ok: bool
    checked: int
    exhaustive: bool
    counterexample: list[int] | None = None


def check_perfect(G: ZdGraph, samples: int = 200, seed: int = 0,
                  exhaustive_limit: int = 12) -> PerfectnessCheck:
    """chi = omega on induced subgraphs: all of them when n <= exhaustive_limit, else a sample."""
    n = G.n
    if n <= exhaustive_limit:
        subsets = (list(c) for k in range(1, n + 1) for c in combinations(range(n), k))
        exhaustive = True
    else:
        rng = random.Random(seed)
        subsets = (sorted(rng.sample(range(n), rng.randint(1, n))) for _ in range(samples))
        exhaustive = False
    checked = 0
    for vs in subsets:
        H = G.induced_subgraph(vs)
        checked += 1
        if chromatic_number(H) != clique_number(H):
            return PerfectnessCheck(False, checked, exhaustive, vs)
    return PerfectnessCheck(True, checked, exhaustive)


@dataclass
class InvariantReport:
    girth: float
    chromatic: int
    clique: int
    independence: int
    connectivity: int
    planar: bool
    cograph: bool
    perfect_on_checked: bool
    components: list[tuple[int, int, tuple[int, ...]]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "girth": None if math.isinf(self.girth) else self.girth,
            "chromatic": self.chromatic,
            "clique": self.clique,
            "independence": self.independence,
            "connectivity": self.connectivity,
            "planar": self.planar,
            "cograph": self.cograph,
            "perfect_on_checked": self.perfect_on_checked,
            "components": [[s, e, list(ds)] for s, e, ds in self.components],
        }


def invariant_report(G: ZdGraph, samples: int = 200, seed: int = 0) -> InvariantReport:
    comps = []
    for H in G.component_subgraphs():
        comps.append((H.n, H.edge_count(), H.degree_sequence()))
    return InvariantReport(
        girth=girth(G),
        chromatic=chromatic_number(G),
        clique=clique_number(G),
        independence=independence_number(G),
        connectivity=vertex_connectivity(G),
        planar=is_planar(G),
        cograph=is_cograph(G),
        perfect_on_checked=check_perfect(G, samples, seed).ok,
        components=comps,
    )
