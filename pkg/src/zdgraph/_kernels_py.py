"""Pure-Python search kernels on bitmask adjacency.

Mirrors ``_kernels.pyx`` line for line so the two backends can be
benchmarked and cross-checked.  Both return ``-1`` as the answer when the
node budget runs out.
"""
from __future__ import annotations

import sys

BACKEND = "python"

if sys.version_info >= (3, 10):
    def _popcount(x: int) -> int:
        return x.bit_count()
else:  # pragma: no cover
    def _popcount(x: int) -> int:
        return bin(x).count("1")


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def max_clique(masks, budget):
    """Size of a maximum clique, by branch and bound with a greedy-coloring bound.

    Returns ``(size, nodes)``; size is -1 if more than ``budget`` nodes were needed.
    """
    n = len(masks)
    best = [0]
    nodes = [0]

    def expand(P, size):
        nodes[0] += 1
        if nodes[0] > budget:
            return False
        if not P:
            if size > best[0]:
                best[0] = size
            return True
        # greedy sequential coloring of P; color[i] bounds the clique in order[:i+1]
        order, colors = [], []
        U, color = P, 0
        while U:
            color += 1
            Q = U
            while Q:
                v = _low(Q)
                bit = 1 << v
                Q &= ~bit
                Q &= ~masks[v]
                U &= ~bit
                order.append(v)
                colors.append(color)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best[0]:
                return True
            v = order[i]
            if not expand(P & masks[v], size + 1):
                return False
            P &= ~(1 << v)
        return True

    ok = expand((1 << n) - 1, 0)
    return (best[0] if ok else -1), nodes[0]


def chromatic(masks, lower, upper, budget):
    """Exact chromatic number by DSATUR branch and bound.

    ``upper`` must be the size of a known proper coloring and ``lower`` a
    proven lower bound (e.g. the clique number).  Returns ``(chi, nodes)``.
    """
    n = len(masks)
    if n == 0:
        return 0, 0
    best = [upper]
    nodes = [0]
    classes = [0] * n

    def search(uncolored, k):
        nodes[0] += 1
        if nodes[0] > budget:
            return False
        if not uncolored:
            if k < best[0]:
                best[0] = k
            return True
        # pick the uncolored vertex of max saturation, ties by degree into uncolored
        pick, pick_sat, pick_deg = -1, -1, -1
        U = uncolored
        while U:
            v = _low(U)
            U &= U - 1
            sat = 0
            for c in range(k):
                if classes[c] & masks[v]:
                    sat += 1
            deg = _popcount(masks[v] & uncolored)
            if sat > pick_sat or (sat == pick_sat and deg > pick_deg):
                pick, pick_sat, pick_deg = v, sat, deg
        v = pick
        bit = 1 << v
        rest = uncolored & ~bit
        for c in range(k):
            if not classes[c] & masks[v]:
                classes[c] |= bit
                ok = search(rest, k)
                classes[c] &= ~bit
                if not ok:
                    return False
                if best[0] <= lower:
                    return True
        if k + 1 < best[0]:
            classes[k] = bit
            ok = search(rest, k + 1)
            classes[k] = 0
            if not ok:
                return False
        return True

    ok = search((1 << n) - 1, 0)
    return (best[0] if ok else -1), nodes[0]
