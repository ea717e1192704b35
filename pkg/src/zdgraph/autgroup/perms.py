"""Permutations as tuples: ``p[i]`` is the image of ``i``.

Products compose left to right, ``mul(p, q)`` applies p first, then q.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def conjugate(x: Perm, g: Perm) -> Perm:
    """g^-1 x g."""
    return mul(mul(inverse(g), x), g)


def check(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"{p} is not a permutation")
    return p


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    out = list(range(n))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            out[a] = cyc[(i + 1) % len(cyc)]
    return check(out)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [i], p[i]
        seen.add(i)
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def sign(p: Perm) -> int:
    return -1 if sum(len(c) - 1 for c in cycles(p)) % 2 else 1


def fmt(p: Perm) -> str:
    cs = cycles(p)
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"


def restrict(p: Perm, points: Sequence[int]) -> Perm:
    """Action of p on ``points`` (which p must preserve), renumbered 0..k-1."""
    index = {x: i for i, x in enumerate(points)}
    try:
        return tuple(index[p[x]] for x in points)
    except KeyError:
        raise ValueError("permutation does not preserve the point set") from None


def extend(p: Perm, points: Sequence[int], n: int) -> Perm:
    """Lift a permutation of ``points`` (given on 0..k-1) to 0..n-1, fixing the rest."""
    out = list(range(n))
    for i, x in enumerate(points):
        out[x] = points[p[i]]
    return tuple(out)
