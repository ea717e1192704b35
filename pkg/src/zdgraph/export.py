"""Deterministic DOT and JSON serialization of constructed graphs."""
from __future__ import annotations

import json
from typing import Any

from .construct import TcVertex
from .graph.core import ZdGraph


def _label(lab) -> str:
    return lab.label() if isinstance(lab, TcVertex) else str(lab)


def to_dot(G: ZdGraph, directed: bool = False, name: str = "G") -> str:
    kind, sep = ("digraph", "->") if directed else ("graph", "--")
    lines = [f"{kind} {name} {{"]
    for v in range(G.n):
        label = _label(G.labels[v]) if G.labels is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    pairs = G.arc_list() if directed else G.edges()
    for u, v in pairs:
        lines.append(f"  {u} {sep} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_document(G: ZdGraph, config: dict[str, Any], invariants: dict[str, Any] | None = None,
                   verdicts: dict[str, Any] | None = None) -> dict[str, Any]:
    if G.labels is None or not all(isinstance(x, TcVertex) for x in G.labels):
        raise ValueError("graph must carry TcVertex labels")
    return {
        "config": config,
        "vertices": [v.to_json() for v in G.labels],
        "arcs": [list(a) for a in G.arc_list()],
        "invariants": invariants or {},
        "verdicts": verdicts or {},
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> dict[str, Any]:
    return json.loads(text)


def graph_from_document(doc: dict[str, Any], ring) -> ZdGraph:
    verts = [TcVertex.from_json(ring, v) for v in doc["vertices"]]
    return ZdGraph(len(verts), [tuple(a) for a in doc["arcs"]], verts)
