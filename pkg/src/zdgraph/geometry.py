"""Points of P^3 with coordinates in O_K: the twisted cubic and the Segre quadric."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .matrix import Mat2
from .ring import QuadInt


@dataclass(frozen=True, slots=True)
class ProjPoint3:
    """Homogeneous coordinates [z0, z1, z2, z3].

    Equality is projective and tested with cross products, so no division
    ever leaves the ring.
    """

    z0: QuadInt
    z1: QuadInt
    z2: QuadInt
    z3: QuadInt

    def __post_init__(self):
        if not any(self.coords()):
            raise ValueError("[0, 0, 0, 0] is not a point of P^3")

    def coords(self) -> tuple[QuadInt, QuadInt, QuadInt, QuadInt]:
        return (self.z0, self.z1, self.z2, self.z3)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint3):
            return NotImplemented
        return proj_equal(self, other)

    def __hash__(self):
        raise TypeError("projective points are not hashable")


def proj_equal(P: ProjPoint3, Q: ProjPoint3) -> bool:
    p, q = P.coords(), Q.coords()
    return all(p[i] * q[j] == p[j] * q[i] for i, j in combinations(range(4), 2))


def nu(x0: QuadInt, x1: QuadInt) -> ProjPoint3:
    """The twisted cubic map [x0, x1] -> [x0^3, x0^2 x1, x0 x1^2, x1^3]."""
    if not x0 and not x1:
        raise ValueError("[0, 0] is not a point of P^1")
    return ProjPoint3(x0 * x0 * x0, x0 * x0 * x1, x0 * x1 * x1, x1 * x1 * x1)


def on_segre(P: ProjPoint3) -> bool:
    return P.z0 * P.z3 == P.z1 * P.z2


def phi(A: Mat2) -> ProjPoint3:
    """[a b; c d] -> [a, b, c, d]."""
    if A.is_zero():
        raise ValueError("the zero matrix has no projective image")
    return ProjPoint3(A.e00, A.e01, A.e10, A.e11)


def on_twisted_cubic(P: ProjPoint3) -> bool:
    """True when P = nu(1, t) for some t in O_K, or P = nu(0, 1)."""
    ring = P.z0.ring
    if not P.z0:
        return proj_equal(P, nu(ring.zero, ring.one))
    t = P.z1.exact_div(P.z0)
    return t is not None and proj_equal(P, nu(ring.one, t))
