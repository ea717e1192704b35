"""Backend selection for the clique and coloring search kernels.

The compiled extension is used when it was built and the graph fits in 64
bits; otherwise the pure-Python twin runs.  Set ``ZDGRAPH_PURE_PYTHON=1``
to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("ZDGRAPH_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python forced by environment")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _kernels_py.BACKEND


def backend_for(n: int):
    if _compiled is not None and n <= 64:
        return _compiled
    return _kernels_py


def available_backends() -> dict:
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def max_clique(masks, budget, backend=None):
    impl = backend if backend is not None else backend_for(len(masks))
    return impl.max_clique(list(masks), budget)


def chromatic(masks, lower, upper, budget, backend=None):
    impl = backend if backend is not None else backend_for(len(masks))
    return impl.chromatic(list(masks), lower, upper, budget)
