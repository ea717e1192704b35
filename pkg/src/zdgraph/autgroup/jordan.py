"""Symmetric groups acting on the t = -1 clique, and the unbounded Jordan lower bound."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..construct import Family, TcVertex, gamma2
from ..errors import ContractViolation
from ..graph.core import ZdGraph
from ..ring import RingDesc
from . import perms
from .schreier import PermGroup
from .simple import is_simple

# simplicity is certified by computation only up to this degree
CERTIFY_DEGREE = 8


def clique_vertices(n: int, ring: RingDesc, graph: ZdGraph) -> list[int]:
    """TC1 vertices with t = -1 and integer |lambda| <= n."""
    if graph.labels is None:
        raise ContractViolation("graph carries no vertex data")
    minus_one = -ring.one
    out = []
    for v, lab in enumerate(graph.labels):
        if not isinstance(lab, TcVertex) or lab.family is not Family.TC1:
            continue
        if lab.t == minus_one and lab.lam.b == 0 and 0 < abs(lab.lam.a) <= n:
            out.append(v)
    return out


def preserves_adjacency(graph: ZdGraph, g: perms.Perm) -> bool:
    """Exhaustive check over all ordered pairs, on arcs and hence on the undirected view."""
    n = graph.n
    return all(graph.has_arc(u, v) == graph.has_arc(g[u], g[v])
               for u in range(n) for v in range(n) if u != v)


def embed_symmetric(n: int, ring: RingDesc, graph: ZdGraph) -> PermGroup:
    """Sym of the 2n-clique, extended by the identity, as automorphisms of ``graph``."""
    if n < 1:
        raise ValueError("n must be positive")
    clique = clique_vertices(n, ring, graph)
    if len(clique) != 2 * n:
        raise ContractViolation(f"expected {2 * n} clique vertices with t = -1, found {len(clique)}")
    if not all(graph.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]):
        raise ContractViolation("t = -1 vertices do not form a clique")
    local = PermGroup.symmetric(2 * n)
    gens = [perms.extend(g, clique, graph.n) for g in local.generators]
    for g in gens:
        if not preserves_adjacency(graph, g):
            raise ContractViolation(f"{perms.fmt(g)} does not preserve adjacency")
    return PermGroup(graph.n, gens)


@dataclass(frozen=True)
class JordanRow:
    n: int
    symmetric_order: int
    bound: int
    simplicity: str


@dataclass
class NonJordanReport:
    """Lower bounds J_G >= |A_2n| for growing n.

    Each row rests on three facts: S_2n acts faithfully by automorphisms,
    A_2n <= S_2n is simple and non-abelian so J_{A_2n} = |A_2n|, and the
    Jordan constant does not decrease when passing to a supergroup.  The bounds
    grow without limit, so no uniform constant exists.
    """

    d: int
    rows: list[JordanRow] = field(default_factory=list)

    def bounds(self) -> list[int]:
        return [r.bound for r in self.rows]

    def strictly_increasing(self) -> bool:
        b = self.bounds()
        return all(x < y for x, y in zip(b, b[1:]))

    def as_dict(self) -> dict:
        return {"d": self.d,
                "rows": [{"n": r.n, "symmetric_order": r.symmetric_order,
                          "bound": r.bound, "simplicity": r.simplicity} for r in self.rows],
                "strictly_increasing": self.strictly_increasing()}


def alternating_on(points: list[int], degree: int) -> PermGroup:
    """A on ``points``, generated by the 3-cycles (p0 p1 pk)."""
    return PermGroup(degree, [perms.from_cycles(degree, [(points[0], points[1], p)])
                              for p in points[2:]])


def non_jordan_report(ring: RingDesc, n_max: int) -> NonJordanReport:
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    report = NonJordanReport(ring.d)
    for n in range(3, n_max + 1):
        graph = gamma2(ring, n)
        S = embed_symmetric(n, ring, graph)
        clique = clique_vertices(n, ring, graph)
        A = alternating_on(clique, graph.n)
        if not all(perms.sign(g) == 1 and g in S for g in A.generators):
            raise ContractViolation("alternating generators are not even elements of the embedded group")
        half = math.factorial(2 * n) // 2
        if A.order() != half:
            raise ContractViolation(f"alternating group order {A.order()} != {half}")
        if 2 * n <= CERTIFY_DEGREE:
            cert = is_simple(A.restricted(clique))
            if not cert.simple:
                raise ContractViolation(f"A_{2 * n} failed the simplicity check")
            simplicity = "certified"
        else:
            simplicity = "known (alternating, degree >= 5)"
        report.rows.append(JordanRow(n, S.order(), half, simplicity))
    return report
