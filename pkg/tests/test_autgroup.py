import math
from itertools import permutations

import pytest

from conftest import random_graphs
from zdgraph import RingDesc, gamma1, gamma2
from zdgraph.autgroup import perms
from zdgraph.autgroup.jordan import clique_vertices, embed_symmetric, non_jordan_report, preserves_adjacency
from zdgraph.autgroup.schreier import PermGroup, closure_elements, group_order
from zdgraph.autgroup.search import automorphism_group, search_automorphisms
from zdgraph.autgroup.simple import conjugacy_classes, is_simple, jordan_constant_small
from zdgraph.construct import Case, truncation_graph
from zdgraph.errors import ContractViolation, ResourceBudgetExceeded
from zdgraph.graph.core import cycle, empty, path
from zdgraph.graph.oracles import brute_automorphisms


def test_perm_basics():
    p = perms.from_cycles(4, [(0, 1, 2)])
    q = perms.from_cycles(4, [(2, 3)])
    assert perms.mul(p, q) == (1, 3, 0, 2)  # p first, then q
    assert perms.mul(p, perms.inverse(p)) == perms.identity(4)
    assert perms.cycles(p) == [(0, 1, 2)] and perms.fmt(q) == "(2 3)"
    assert perms.sign(p) == 1 and perms.sign(q) == -1
    assert perms.restrict(q, [2, 3]) == (1, 0)
    assert perms.extend((1, 0), [2, 3], 4) == q
    with pytest.raises(ValueError):
        perms.check((0, 0, 1))


def test_group_order_examples():
    assert group_order(PermGroup(2, [(1, 0)])) == 2
    assert group_order(PermGroup.symmetric(4)) == 24
    assert group_order(PermGroup.alternating(5)) == 60
    assert group_order(PermGroup(5)) == 1


def test_chain_matches_enumeration_small_degrees():
    import random
    rng = random.Random(3)
    for _ in range(60):
        m = rng.randint(1, 8)
        gens = []
        for _ in range(rng.randint(0, 3)):
            p = list(range(m))
            rng.shuffle(p)
            gens.append(tuple(p))
        G = PermGroup(m, gens)
        elems = closure_elements(m, gens)
        assert G.order() == len(elems)
        assert math.factorial(m) % G.order() == 0
        assert set(G.elements()) == elems
        assert all(g in G for g in elems)


def test_membership():
    A = PermGroup.alternating(5)
    assert perms.from_cycles(5, [(0, 1, 2)]) in A
    assert perms.from_cycles(5, [(0, 1)]) not in A


def test_aut_examples():
    assert automorphism_group(gamma1(RingDesc.of(0), 1)).order() == 8
    assert automorphism_group(gamma2(RingDesc.of(3), 1)).order() == 384
    for m in range(1, 7):
        assert automorphism_group(empty(m)).order() == math.factorial(m)


def test_aut_against_brute_force():
    graphs = random_graphs(25, 7, seed=21) + [path(5), cycle(6), gamma2(RingDesc.of(2), 1)]
    for G in graphs:
        brute = set(brute_automorphisms(G))
        res = search_automorphisms(G)
        assert res.group.order() == len(brute) == res.search_order
        assert set(res.generators) <= brute


def test_aut_generators_are_automorphisms():
    G = gamma2(RingDesc.of(1), 2)
    edges = set(G.edges())
    for g in automorphism_group(G).generators:
        assert {tuple(sorted((g[u], g[v]))) for u, v in edges} == edges


def test_aut_budget():
    with pytest.raises(ResourceBudgetExceeded):
        search_automorphisms(empty(8), budget=2)


def test_simplicity():
    for n in (5, 6, 8):
        cert = is_simple(PermGroup.alternating(n))
        assert cert.simple and cert.order == math.factorial(n) // 2
    s4 = is_simple(PermGroup.symmetric(4))
    assert not s4 and s4.witness is not None and s4.witness.order() in (4, 12)
    assert not is_simple(PermGroup.cyclic(6))
    assert is_simple(PermGroup.cyclic(5))
    assert not is_simple(PermGroup(3))
    assert not is_simple(PermGroup.alternating(4))


def test_conjugacy_classes_s4():
    sizes = sorted(len(c) for c in conjugacy_classes(PermGroup.symmetric(4)))
    assert sizes == [1, 3, 6, 6, 8]


def test_jordan_constants():
    assert jordan_constant_small(PermGroup.alternating(5)) == 60
    assert jordan_constant_small(PermGroup.cyclic(6)) == 1
    assert jordan_constant_small(PermGroup.symmetric(3)) == 2


def test_jordan_monotone_under_inclusion():
    chain = [PermGroup.cyclic(4), PermGroup(4, [perms.from_cycles(4, [(0, 1, 2, 3)]), (3, 2, 1, 0)]),
             PermGroup.symmetric(4)]
    values = [jordan_constant_small(G) for G in chain]
    assert values == sorted(values)
    assert jordan_constant_small(PermGroup.alternating(4)) <= jordan_constant_small(PermGroup.symmetric(4))


def test_jordan_s3_brute():
    # independent oracle: least index of a normal abelian subgroup, maximized over all subgroups
    S3 = [p for p in permutations(range(3))]
    subsets = [frozenset(closure_elements(3, gs)) for k in range(3) for gs in permutations(S3, k)]
    subs = set(subsets)

    def abelian(H):
        return all(perms.mul(a, b) == perms.mul(b, a) for a in H for b in H)

    def normal(A, H):
        return all(perms.conjugate(a, h) in A for a in A for h in H)

    best = max(min(len(H) // len(A) for A in subs if A <= H and abelian(A) and normal(A, H)) for H in subs)
    assert best == jordan_constant_small(PermGroup.symmetric(3)) == 2


def test_embed_symmetric_examples():
    R0 = RingDesc.of(0)
    assert embed_symmetric(1, R0, truncation_graph(R0, Case.FULL, 1)).order() == 2
    R1 = RingDesc.of(1)
    G = truncation_graph(R1, Case.FULL, 3)
    S = embed_symmetric(3, R1, G)
    assert S.order() == 720
    assert all(preserves_adjacency(G, g) for g in S.generators)
    with pytest.raises(ContractViolation):
        embed_symmetric(1, R0, gamma1(R0, 1))


def test_embed_symmetric_all_elements_small():
    R = RingDesc.of(2)
    G = gamma2(R, 2)
    S = embed_symmetric(2, R, G)
    assert all(preserves_adjacency(G, g) for g in S.elements())


def test_embed_into_larger_level():
    R = RingDesc.of(3)
    G = gamma2(R, 3)
    assert len(clique_vertices(2, R, G)) == 4
    assert embed_symmetric(2, R, G).order() == 24


def test_non_jordan_report():
    rep = non_jordan_report(RingDesc.of(2), 4)
    assert rep.bounds() == [360, 20160]
    assert rep.strictly_increasing()
    assert all(r.simplicity == "certified" for r in rep.rows)
    with pytest.raises(ValueError):
        non_jordan_report(RingDesc.of(2), 2)
