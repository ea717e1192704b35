"""Conjugacy classes, simplicity certificates and small Jordan constants."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import ResourceBudgetExceeded
from .perms import Perm, conjugate, identity, is_identity, mul
from .schreier import PermGroup, closure_elements

SIMPLE_ORDER_LIMIT = 10**5
JORDAN_ORDER_LIMIT = 5000
CLOSURE_BUDGET = 10**4
# subset filter over classes is 2^(k-1); above this fall back to per-class closures
CLASS_FILTER_LIMIT = 20


def conjugacy_classes(G: PermGroup, limit: int = SIMPLE_ORDER_LIMIT) -> list[list[Perm]]:
    """Classes as sorted lists, the identity class first, then by size and content."""
    elems = G.elements(limit)
    seen: set[Perm] = set()
    classes = []
    for x in elems:
        if x in seen:
            continue
        cls, stack = {x}, [x]
        while stack:
            y = stack.pop()
            for g in G.generators:
                z = conjugate(y, g)
                if z not in cls:
                    cls.add(z)
                    stack.append(z)
        seen |= cls
        classes.append(sorted(cls))
    classes.sort(key=lambda c: (not is_identity(c[0]), len(c), c))
    return classes


def normal_closure(G: PermGroup, elements) -> PermGroup:
    """Smallest normal subgroup of G containing ``elements``."""
    gens = [tuple(x) for x in elements if not is_identity(tuple(x))]
    N = PermGroup(G.degree, gens)
    changed = True
    while changed:
        changed = False
        for x in list(N.generators):
            for g in G.generators:
                y = conjugate(x, g)
                if y not in N:
                    N = PermGroup(G.degree, N.generators + (y,))
                    changed = True
    return N


@dataclass
class SimplicityCertificate:
    """``simple`` plus the evidence: the class sizes, the class unions that
    survived the divisor filter, and a proper normal subgroup when one exists."""

    simple: bool
    order: int
    class_sizes: list[int] = field(default_factory=list)
    candidate_sizes: list[int] = field(default_factory=list)
    witness: PermGroup | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.simple


def _is_prime(m: int) -> bool:
    return m > 1 and all(m % p for p in range(2, int(m**0.5) + 1))


def is_simple(G: PermGroup, limit: int = SIMPLE_ORDER_LIMIT) -> SimplicityCertificate:
    order = G.order()
    if order == 1:
        return SimplicityCertificate(False, 1, reason="trivial group")
    if G.is_abelian():
        if _is_prime(order):
            return SimplicityCertificate(True, order, reason="cyclic of prime order")
        # any element of prime order p < |G| generates a proper normal subgroup
        p = next(q for q in range(2, order) if order % q == 0)
        x = next(g for g in G.iter_elements() if not is_identity(g)
                 and _power(g, p) == identity(G.degree))
        return SimplicityCertificate(False, order, witness=PermGroup(G.degree, [x]),
                                     reason=f"abelian of composite order {order}")
    if order > limit:
        raise ResourceBudgetExceeded(f"group order {order} above limit {limit}", limit)
    classes = conjugacy_classes(G, limit)
    sizes = [len(c) for c in classes]
    cert = SimplicityCertificate(True, order, class_sizes=sizes)
    rest = list(range(1, len(classes)))
    if len(rest) <= CLASS_FILTER_LIMIT:
        # a normal subgroup is a union of classes, identity included, of order dividing |G|
        for k in range(1, len(rest)):
            for combo in combinations(rest, k):
                total = 1 + sum(sizes[i] for i in combo)
                if total >= order or order % total:
                    continue
                cert.candidate_sizes.append(total)
                N = normal_closure(G, [classes[i][0] for i in combo])
                if N.order() == total:
                    cert.simple = False
                    cert.witness = N
                    cert.reason = f"normal subgroup of order {total}"
                    return cert
        cert.reason = "no union of classes closes to a proper normal subgroup"
        return cert
    for c in classes[1:]:
        N = normal_closure(G, [c[0]])
        if N.order() < order:
            cert.simple = False
            cert.witness = N
            cert.reason = f"normal closure of order {N.order()}"
            return cert
    cert.reason = "every nontrivial class has normal closure G"
    return cert


def _power(g: Perm, k: int) -> Perm:
    out = identity(len(g))
    for _ in range(k):
        out = mul(out, g)
    return out


@dataclass(frozen=True)
class _Sub:
    elements: frozenset
    gens: tuple

    def is_abelian(self) -> bool:
        return all(mul(a, b) == mul(b, a) for a, b in combinations(self.gens, 2))

    def normalizes(self, other: _Sub) -> bool:
        """True when ``other`` is normal in self (other must be a subset)."""
        return all(conjugate(x, g) in other.elements for x in other.gens for g in self.gens)


def _subgroups(G: PermGroup, max_gens: int, budget: int) -> list[_Sub]:
    """Subgroups generated by at most ``max_gens`` elements, by layered closure."""
    elems = G.elements(JORDAN_ORDER_LIMIT)
    deg = G.degree
    work = 0
    found: dict[frozenset, _Sub] = {}
    trivial = frozenset([identity(deg)])
    found[trivial] = _Sub(trivial, ())
    layer = [found[trivial]]
    for _ in range(max_gens):
        nxt = []
        for H in layer:
            for x in elems:
                if x in H.elements:
                    continue
                gens = H.gens + (x,)
                S = frozenset(closure_elements(deg, gens, limit=budget))
                work += len(S)
                # per-closure cap is ``budget``; total work is capped at budget * |G|
                if work > budget * len(elems):
                    raise ResourceBudgetExceeded("subgroup enumeration exceeded its budget", budget)
                if S not in found:
                    found[S] = _Sub(S, gens)
                    nxt.append(found[S])
        layer = nxt
    return list(found.values())


def jordan_constant_small(G: PermGroup, budget: int = CLOSURE_BUDGET) -> int:
    """max over finite subgroups H of the least index of a normal abelian subgroup of H.

    Subgroups are those generated by at most three elements.
    """
    order = G.order()
    if G.is_abelian():
        return 1
    if order > JORDAN_ORDER_LIMIT:
        cert = is_simple(G)
        if cert.simple:
            return order
        raise ResourceBudgetExceeded(
            f"order {order} is neither abelian nor simple and above {JORDAN_ORDER_LIMIT}",
            JORDAN_ORDER_LIMIT, partial=2)
    if is_simple(G).simple:
        return order
    subs = _subgroups(G, 3, budget)
    subs.sort(key=lambda S: len(S.elements))
    abelian = [S for S in subs if S.is_abelian()]
    best = 1
    for H in subs:
        hn = len(H.elements)
        least = min(hn // len(A.elements) for A in abelian
                    if len(A.elements) <= hn and hn % len(A.elements) == 0
                    and A.elements <= H.elements and H.normalizes(A))
        best = max(best, least)
    return best
