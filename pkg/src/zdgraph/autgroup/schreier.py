"""Permutation groups given by generators, with a Schreier-Sims stabilizer chain."""
from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator

from ..errors import ResourceBudgetExceeded
from . import perms
from .perms import Perm, identity, inverse, is_identity, mul


class _Level:
    """One level of the chain: a base point, the generators of the current
    stabilizer and a transversal ``trans[x]`` mapping the base point to x."""

    __slots__ = ("n", "point", "gens", "trans", "next")

    def __init__(self, n: int):
        self.n = n
        self.point = None
        self.gens: list[Perm] = []
        self.trans: dict[int, Perm] = {}
        self.next: _Level | None = None

    def strip(self, g: Perm) -> Perm:
        level = self
        while level.point is not None:
            u = level.trans.get(g[level.point])
            if u is None:
                return g
            g = mul(g, inverse(u))
            level = level.next
        return g

    def add(self, g: Perm) -> None:
        if is_identity(self.strip(g)):
            return
        if self.point is None:
            self.point = next(i for i, x in enumerate(g) if i != x)
            self.trans = {self.point: identity(self.n)}
            self.next = _Level(self.n)
        self.gens.append(g)
        self._close()

    def _close(self) -> None:
        # extend the orbit under all generators
        orbit = list(self.trans)
        k = 0
        while k < len(orbit):
            beta = orbit[k]
            for s in self.gens:
                img = s[beta]
                if img not in self.trans:
                    self.trans[img] = mul(self.trans[beta], s)
                    orbit.append(img)
            k += 1
        # every Schreier generator must lie in the next level's group
        for beta in orbit:
            u = self.trans[beta]
            for s in self.gens:
                sg = mul(mul(u, s), inverse(self.trans[s[beta]]))
                if not is_identity(sg):
                    self.next.add(sg)


class PermGroup:
    """Subgroup of Sym({0..degree-1}) generated by ``generators``.

    The stabilizer chain is built on first use; ``order()`` is the product of
    its orbit lengths.
    """

    def __init__(self, degree: int, generators: Iterable[Perm] = ()):
        self.degree = degree
        gens = []
        for g in generators:
            g = perms.check(g)
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
            if not is_identity(g):
                gens.append(g)
        self.generators = tuple(gens)
        self._chain: _Level | None = None

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)})"

    @classmethod
    def symmetric(cls, n: int) -> PermGroup:
        if n < 2:
            return cls(max(n, 0))
        gens = [perms.from_cycles(n, [(0, 1)])]
        if n > 2:
            gens.append(perms.from_cycles(n, [tuple(range(n))]))
        return cls(n, gens)

    @classmethod
    def alternating(cls, n: int) -> PermGroup:
        return cls(n, [perms.from_cycles(n, [(0, 1, k)]) for k in range(2, n)])

    @classmethod
    def cyclic(cls, n: int) -> PermGroup:
        return cls(n, [perms.from_cycles(n, [tuple(range(n))])] if n > 1 else [])

    def chain(self) -> _Level:
        if self._chain is None:
            root = _Level(self.degree)
            for g in self.generators:
                root.add(g)
            self._chain = root
        return self._chain

    def levels(self) -> list[_Level]:
        out, level = [], self.chain()
        while level.point is not None:
            out.append(level)
            level = level.next
        return out

    def base(self) -> list[int]:
        return [lv.point for lv in self.levels()]

    def order(self) -> int:
        return math.prod(len(lv.trans) for lv in self.levels())

    def __contains__(self, g) -> bool:
        g = tuple(g)
        return len(g) == self.degree and is_identity(self.chain().strip(g))

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(gs) for b in gs[i + 1:])

    def orbit(self, point: int) -> list[int]:
        seen, queue = {point}, deque([point])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                if g[x] not in seen:
                    seen.add(g[x])
                    queue.append(g[x])
        return sorted(seen)

    def iter_elements(self) -> Iterator[Perm]:
        levels = self.levels()

        def walk(i: int) -> Iterator[Perm]:
            if i == len(levels):
                yield identity(self.degree)
                return
            for h in walk(i + 1):
                for u in levels[i].trans.values():
                    yield mul(h, u)

        return walk(0)

    def elements(self, limit: int = 10**5) -> list[Perm]:
        if self.order() > limit:
            raise ResourceBudgetExceeded(f"group of order {self.order()} exceeds element limit {limit}", limit)
        return list(self.iter_elements())

    def restricted(self, points) -> PermGroup:
        """The action on an invariant point set, renumbered 0..k-1."""
        points = list(points)
        return PermGroup(len(points), [perms.restrict(g, points) for g in self.generators])


def group_order(G: PermGroup) -> int:
    return G.order()


def closure_elements(degree: int, generators: Iterable[Perm], limit: int = 10**5) -> set[Perm]:
    """Elements of <generators> by breadth-first closure; independent of the chain."""
    gens = [tuple(g) for g in generators]
    start = identity(degree)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise ResourceBudgetExceeded(f"closure exceeded {limit} elements", limit)
                queue.append(y)
    return seen
