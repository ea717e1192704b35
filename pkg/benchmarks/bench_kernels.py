"""Time the compiled and pure-Python search kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import random
import time

from zdgraph import RingDesc, gamma2
from zdgraph.graph.core import ZdGraph
from zdgraph.graph.invariants import greedy_coloring
from zdgraph.kernels import available_backends, chromatic, max_clique

BUDGET = 10**7


def random_graph(n: int, p: float, seed: int) -> ZdGraph:
    rng = random.Random(seed)
    return ZdGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def cases():
    for d, n in [(2, 3), (1, 3), (3, 3)]:
        yield f"gamma2 d={d} n={n}", gamma2(RingDesc.of(d), n).undirected()
    for n, p in [(30, 0.5), (40, 0.3), (50, 0.5), (60, 0.7)]:
        yield f"G({n},{p})", random_graph(n, p, seed=n)


def run(repeat: int) -> None:
    backends = available_backends()
    print(f"{'instance':24} {'kernel':10} " + " ".join(f"{name:>12}" for name in backends))
    for label, G in cases():
        masks = G.adjacency_masks()
        upper = max(greedy_coloring(G)) + 1 if G.n else 0
        for kernel in ("clique", "chromatic"):
            cells, results = [], set()
            for impl in backends.values():
                best = float("inf")
                for _ in range(repeat):
                    t0 = time.perf_counter()
                    if kernel == "clique":
                        res = max_clique(masks, BUDGET, backend=impl)[0]
                    else:
                        lower = max_clique(masks, BUDGET, backend=impl)[0]
                        res = chromatic(masks, lower, upper, BUDGET, backend=impl)[0]
                    best = min(best, time.perf_counter() - t0)
                results.add(res)
                cells.append(f"{best * 1e3:10.2f}ms")
            flag = "" if len(results) == 1 else "  MISMATCH"
            print(f"{label:24} {kernel:10} " + " ".join(cells) + flag)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    run(ap.parse_args().repeat)
