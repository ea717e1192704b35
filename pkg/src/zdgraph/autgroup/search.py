"""Automorphisms of undirected graphs by partition refinement and backtracking.

The search follows the usual individualization-refinement scheme.  The first
path individualizes the first vertex of the first non-singleton cell at each
level; its leaf fixes a reference labeling.  Working from the deepest level
up, every vertex of the target cell not yet in the orbit of the generators
found so far is tried, and a depth-first search looks for a leaf whose
labeling is an automorphism.  Nothing here knows about the graph families.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
import math

from ..errors import ResourceBudgetExceeded
from ..graph.core import ZdGraph
from .perms import Perm
from .schreier import PermGroup

AUT_BUDGET = 10**6


class _Partition:
    """Ordered partition of 0..n-1.  ``order`` lists vertices cell by cell;
    a cell is identified by its start position."""

    __slots__ = ("order", "cell_of", "size", "n")

    def __init__(self, n: int):
        self.n = n
        self.order = list(range(n))
        self.cell_of = [0] * n
        self.size = [0] * n
        if n:
            self.size[0] = n

    def copy(self) -> _Partition:
        p = _Partition.__new__(_Partition)
        p.n = self.n
        p.order = self.order[:]
        p.cell_of = self.cell_of[:]
        p.size = self.size[:]
        return p

    def starts(self) -> list[int]:
        out, i = [], 0
        while i < self.n:
            out.append(i)
            i += self.size[i]
        return out

    def shape(self) -> tuple[int, ...]:
        return tuple(self.size[i] for i in self.starts())

    def cell(self, start: int) -> list[int]:
        return self.order[start:start + self.size[start]]

    def is_discrete(self) -> bool:
        return all(self.size[i] == 1 for i in self.starts())

    def first_nonsingleton(self) -> int:
        return next(i for i in self.starts() if self.size[i] > 1)

    def refine(self, nbrs: list[frozenset[int]], queue: list[int]) -> None:
        """Split cells by neighbour counts until equitable w.r.t. the queued cells."""
        queue = deque(queue)
        queued = set(queue)
        while queue:
            w_start = queue.popleft()
            queued.discard(w_start)
            counts: dict[int, int] = {}
            for w in self.cell(w_start):
                for u in nbrs[w]:
                    counts[u] = counts.get(u, 0) + 1
            for start in sorted({self.cell_of[u] for u in counts}):
                size = self.size[start]
                if size == 1:
                    continue
                groups: dict[int, list[int]] = {}
                for v in self.order[start:start + size]:
                    groups.setdefault(counts.get(v, 0), []).append(v)
                if len(groups) == 1:
                    continue
                pos = start
                for key in sorted(groups):
                    grp = groups[key]
                    self.order[pos:pos + len(grp)] = grp
                    for v in grp:
                        self.cell_of[v] = pos
                    self.size[pos] = len(grp)
                    if pos not in queued:
                        queue.append(pos)
                        queued.add(pos)
                    pos += len(grp)

    def individualize(self, v: int, nbrs: list[frozenset[int]]) -> None:
        start = self.cell_of[v]
        size = self.size[start]
        if size == 1:
            return
        cell = self.order[start:start + size]
        cell.remove(v)
        self.order[start:start + size] = [v] + cell
        self.size[start] = 1
        self.size[start + 1] = size - 1
        for u in cell:
            self.cell_of[u] = start + 1
        # the old cell was equitable, so splitting off v is the only new information
        self.refine(nbrs, [start])


@dataclass
class AutomorphismSearch:
    """Outcome of one search.  ``search_order`` is the product of the base
    orbit lengths seen during the search; it must agree with the
    stabilizer-chain order of ``group``."""

    group: PermGroup
    base: list[int]
    orbit_sizes: list[int]
    nodes: int
    generators: list[Perm] = field(default_factory=list)

    @property
    def search_order(self) -> int:
        return math.prod(self.orbit_sizes)


def _orbit(point: int, gens: list[Perm]) -> set[int]:
    seen, stack = {point}, [point]
    while stack:
        x = stack.pop()
        for g in gens:
            if g[x] not in seen:
                seen.add(g[x])
                stack.append(g[x])
    return seen


def search_automorphisms(G: ZdGraph, budget: int = AUT_BUDGET) -> AutomorphismSearch:
    H = G.undirected()
    n = H.n
    nbrs = [H.neighbors(v) for v in range(n)]
    masks = H.adjacency_masks()
    nodes = 0

    def is_automorphism(g: Perm) -> bool:
        for u in range(n):
            m = 0
            for w in nbrs[u]:
                m |= 1 << g[w]
            if m != masks[g[u]]:
                return False
        return True

    root = _Partition(n)
    if n:
        root.refine(nbrs, [0])
    path, base, targets = [root], [], []
    P = root
    while not P.is_discrete():
        cell = P.cell(P.first_nonsingleton())
        child = P.copy()
        child.individualize(cell[0], nbrs)
        base.append(cell[0])
        targets.append(cell)
        path.append(child)
        P = child
    leaf0 = P.order
    shapes = [p.shape() for p in path]

    def dfs(P: _Partition, depth: int) -> Perm | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceBudgetExceeded(f"automorphism search exceeded {budget} nodes", budget)
        if P.is_discrete():
            g = [0] * n
            for k, v in enumerate(leaf0):
                g[v] = P.order[k]
            g = tuple(g)
            return g if is_automorphism(g) else None
        for u in P.cell(P.first_nonsingleton()):
            child = P.copy()
            child.individualize(u, nbrs)
            if child.shape() != shapes[depth + 1]:
                continue
            found = dfs(child, depth + 1)
            if found is not None:
                return found
        return None

    gens: list[Perm] = []
    orbit_sizes = [1] * len(base)
    for i in reversed(range(len(base))):
        orbit = _orbit(base[i], gens)
        for w in targets[i]:
            if w in orbit:
                continue
            child = path[i].copy()
            child.individualize(w, nbrs)
            if child.shape() != shapes[i + 1]:
                continue
            g = dfs(child, i + 1)
            if g is not None:
                gens.append(g)
                orbit = _orbit(base[i], gens)
        orbit_sizes[i] = len(orbit)
    return AutomorphismSearch(PermGroup(n, gens), base, orbit_sizes, nodes, gens)


def automorphism_group(G: ZdGraph, budget: int = AUT_BUDGET) -> PermGroup:
    """Aut of the undirected view of G."""
    return search_automorphisms(G, budget).group
