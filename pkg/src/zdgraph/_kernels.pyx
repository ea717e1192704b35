# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels on 64-bit adjacency masks (graphs with <= 64 vertices).

Same algorithms and return conventions as ``_kernels_py``.
"""
from libc.stdint cimport uint64_t

BACKEND = "cython"
MAX_VERTICES = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int _low(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef struct Search:
    uint64_t adj[64]
    uint64_t classes[64]
    int n
    int best
    int lower
    long long nodes
    long long budget


cdef bint _expand(Search* s, uint64_t P, int size) noexcept nogil:
    cdef int order[64]
    cdef int colors[64]
    cdef int cnt = 0, color = 0, v, i
    cdef uint64_t U, Q, bit
    s.nodes += 1
    if s.nodes > s.budget:
        return False
    if P == 0:
        if size > s.best:
            s.best = size
        return True
    U = P
    while U:
        color += 1
        Q = U
        while Q:
            v = _low(Q)
            bit = (<uint64_t>1) << v
            Q &= ~bit
            Q &= ~s.adj[v]
            U &= ~bit
            order[cnt] = v
            colors[cnt] = color
            cnt += 1
    for i in range(cnt - 1, -1, -1):
        if size + colors[i] <= s.best:
            return True
        v = order[i]
        if not _expand(s, P & s.adj[v], size + 1):
            return False
        P &= ~((<uint64_t>1) << v)
    return True


cdef bint _search(Search* s, uint64_t uncolored, int k) noexcept nogil:
    cdef int pick = -1, pick_sat = -1, pick_deg = -1
    cdef int v, c, sat, deg
    cdef uint64_t U, bit, rest
    s.nodes += 1
    if s.nodes > s.budget:
        return False
    if uncolored == 0:
        if k < s.best:
            s.best = k
        return True
    U = uncolored
    while U:
        v = _low(U)
        U &= U - 1
        sat = 0
        for c in range(k):
            if s.classes[c] & s.adj[v]:
                sat += 1
        deg = _popcount(s.adj[v] & uncolored)
        if sat > pick_sat or (sat == pick_sat and deg > pick_deg):
            pick = v
            pick_sat = sat
            pick_deg = deg
    v = pick
    bit = (<uint64_t>1) << v
    rest = uncolored & ~bit
    for c in range(k):
        if not (s.classes[c] & s.adj[v]):
            s.classes[c] |= bit
            if not _search(s, rest, k):
                s.classes[c] &= ~bit
                return False
            s.classes[c] &= ~bit
            if s.best <= s.lower:
                return True
    if k + 1 < s.best:
        s.classes[k] = bit
        if not _search(s, rest, k + 1):
            s.classes[k] = 0
            return False
        s.classes[k] = 0
    return True


cdef void _load(Search* s, masks) except *:
    cdef int i
    s.n = len(masks)
    if s.n > 64:
        raise ValueError("compiled kernels handle at most 64 vertices")
    for i in range(64):
        s.adj[i] = 0
        s.classes[i] = 0
    for i in range(s.n):
        s.adj[i] = <uint64_t>masks[i]
    s.nodes = 0


def max_clique(masks, long long budget):
    cdef Search s
    cdef uint64_t full
    cdef bint ok
    _load(&s, masks)
    s.best = 0
    s.budget = budget
    full = (~(<uint64_t>0)) if s.n == 64 else (((<uint64_t>1) << s.n) - 1)
    with nogil:
        ok = _expand(&s, full, 0)
    return (s.best if ok else -1), s.nodes


def chromatic(masks, int lower, int upper, long long budget):
    cdef Search s
    cdef uint64_t full
    cdef bint ok
    _load(&s, masks)
    if s.n == 0:
        return 0, 0
    s.best = upper
    s.lower = lower
    s.budget = budget
    full = (~(<uint64_t>0)) if s.n == 64 else (((<uint64_t>1) << s.n) - 1)
    with nogil:
        ok = _search(&s, full, 0)
    return (s.best if ok else -1), s.nodes
