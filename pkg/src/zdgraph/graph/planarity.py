"""Planarity decision.

The full test is networkx's left-right planarity algorithm; the edge-count
bound E <= 3V - 6 only serves as a fast negative path.
"""
from __future__ import annotations

import networkx as nx

from .core import ZdGraph


def to_networkx(G: ZdGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def is_planar(G: ZdGraph) -> bool:
    if G.n >= 3 and G.edge_count() > 3 * G.n - 6:
        return False
    planar, _ = nx.check_planarity(to_networkx(G))
    return planar
