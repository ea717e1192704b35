from zdgraph import RingDesc, gamma1, gamma2
from zdgraph.construct import Case, truncation_graph
from zdgraph.export import dumps, graph_document, graph_from_document, loads, to_dot


def test_dot_undirected_and_directed():
    G = gamma2(RingDesc.of(1), 1)
    dot = to_dot(G)
    assert dot.startswith("graph G {") and dot.count(" -- ") == G.edge_count()
    assert 'label="t=i;lambda=1"' in dot
    ddot = to_dot(G, directed=True)
    assert ddot.startswith("digraph") and ddot.count(" -> ") == len(G.arc_list())


def test_json_roundtrip_and_determinism():
    R = RingDesc.of(3)
    G = truncation_graph(R, Case.FULL, 1, box_radius=1)
    doc = graph_document(G, {"d": 3, "case": "full", "level": 1}, {"clique": 3}, {"ok": True})
    text = dumps(doc)
    assert loads(text) == doc
    assert dumps(loads(text)) == text
    assert graph_from_document(loads(text), R) == G
    assert dumps(graph_document(truncation_graph(R, Case.FULL, 1, box_radius=1), doc["config"],
                                {"clique": 3}, {"ok": True})) == text


def test_json_schema():
    G = gamma1(RingDesc.of(0), 1)
    doc = graph_document(G, {})
    assert set(doc) == {"config", "vertices", "arcs", "invariants", "verdicts"}
    assert set(doc["vertices"][0]) == {"family", "t", "lambda", "matrix"}
    assert len(doc["vertices"]) == 4 and len(doc["arcs"]) == 8
