"""Twisted-cubic induced subgraphs of the zero-divisor graph of M_2(O_K)."""
from .ring import QuadInt, RingDesc
from .matrix import Mat2
from .construct import Case, Family, TcVertex, build_graph, gamma1, gamma2, truncation_graph
from .graph.core import ZdGraph

__version__ = "0.1.0"

__all__ = [
    "Case", "Family", "Mat2", "QuadInt", "RingDesc", "TcVertex", "ZdGraph",
    "build_graph", "gamma1", "gamma2", "truncation_graph",
]
