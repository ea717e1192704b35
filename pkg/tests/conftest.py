import random
import sys

import pytest

from zdgraph import RingDesc, gamma1, gamma2
from zdgraph.construct import Case, truncation_graph
from zdgraph.graph.core import (ZdGraph, complete, complete_bipartite, cycle, disjoint_union, empty,
                                join, path)

D_VALUES = (0, 1, 2, 3, 5, 7)
TABLE_D = (2, 1, 3)


def random_graph(n: int, p: float, rng: random.Random) -> ZdGraph:
    return ZdGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graphs(count: int = 50, max_n: int = 10, seed: int = 1234) -> list[ZdGraph]:
    rng = random.Random(seed)
    return [random_graph(rng.randint(1, max_n), rng.choice([0.2, 0.4, 0.5, 0.7, 0.9]), rng)
            for _ in range(count)]


def small_constructed_graphs() -> list[tuple[str, ZdGraph]]:
    """Every graph with at most 10 vertices that the test-suite builds."""
    out = []
    for d in (0, 1, 2, 3, 5):
        R = RingDesc.of(d)
        for n in (1, 2):
            for name, G in ((f"gamma1 d={d} n={n}", gamma1(R, n)), (f"gamma2 d={d} n={n}", gamma2(R, n))):
                if G.n <= 10:
                    out.append((name, G))
        G = truncation_graph(R, Case.FULL, 1)
        if G.n <= 10:
            out.append((f"full d={d} N=1", G))
    out += [
        ("empty5", empty(5)), ("K4", complete(4)), ("K2,3", complete_bipartite(2, 3)),
        ("P4", path(4)), ("C5", cycle(5)), ("C6", cycle(6)),
        ("2K1*K2", join(empty(2), complete(2))),
        ("C5+K3", disjoint_union(cycle(5), complete(3))),
    ]
    return out


@pytest.fixture(params=D_VALUES, ids=lambda d: f"d={d}")
def ring(request):
    return RingDesc.of(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
