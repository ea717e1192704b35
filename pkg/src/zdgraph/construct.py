"""Twisted-cubic vertex families and their induced zero-divisor graphs."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import NotInFamilyError
from .graph.core import ZdGraph
from .matrix import Mat2, diagonal_matrix, is_zero_divisor, mat_mul, twisted_cubic_matrix
from .ring import QuadInt, RingDesc, box, units


class Family(enum.IntEnum):
    TC1 = 1
    TC2 = 2


class Case(enum.Enum):
    GAMMA1 = "gamma1"
    GAMMA2 = "gamma2"
    FULL = "full"


class Adjacency(enum.Enum):
    """Arcs between a parameter-t vertex A and a parameter-s vertex B."""

    AB_ZERO = "A->B"
    CA_ZERO = "B->A"
    BOTH = "both"
    NONE = "none"


@dataclass(frozen=True, slots=True)
class TcVertex:
    matrix: Mat2
    family: Family
    t: QuadInt | None
    lam: QuadInt

    @classmethod
    def tc1(cls, lam: QuadInt, t: QuadInt) -> TcVertex:
        if not lam:
            raise NotInFamilyError("lambda must be nonzero")
        return cls(twisted_cubic_matrix(lam, t), Family.TC1, t, lam)

    @classmethod
    def tc2(cls, lam: QuadInt) -> TcVertex:
        if not lam:
            raise NotInFamilyError("lambda must be nonzero")
        return cls(diagonal_matrix(lam), Family.TC2, None, lam)

    def sort_key(self):
        t = self.t.sort_key() if self.t is not None else (0, 0)
        return (int(self.family), t, self.lam.sort_key())

    def label(self) -> str:
        if self.family is Family.TC2:
            return f"diag;lambda={self.lam}"
        return f"t={self.t};lambda={self.lam}"

    def to_json(self) -> dict:
        return {
            "family": self.family.name,
            "t": self.t.coords() if self.t is not None else None,
            "lambda": self.lam.coords(),
            "matrix": self.matrix.to_json(),
        }

    @classmethod
    def from_json(cls, ring: RingDesc, obj: dict) -> TcVertex:
        lam = ring(*obj["lambda"])
        if obj["family"] == "TC2":
            return cls.tc2(lam)
        return cls.tc1(lam, ring(*obj["t"]))


@dataclass(frozen=True)
class TruncationSpec:
    """Level-N truncation: integer lambda in [-N, N] minus 0, for each t in ``t_set``."""

    ring: RingDesc
    level: int
    t_set: tuple[QuadInt, ...]
    include_diag: bool = False


def family_vertices(spec: TruncationSpec) -> list[TcVertex]:
    if spec.level < 1:
        raise ValueError("truncation level must be >= 1")
    ring = spec.ring
    lams = [ring(k) for k in range(-spec.level, spec.level + 1) if k]
    ts = sorted(set(spec.t_set), key=QuadInt.sort_key)
    verts = [TcVertex.tc1(lam, t) for t in ts for lam in lams]
    if spec.include_diag:
        verts += [TcVertex.tc2(lam) for lam in lams]
    return sorted(verts, key=TcVertex.sort_key)


def default_t_set(ring: RingDesc, case: Case) -> tuple[QuadInt, ...]:
    """{0} for the bipartite piece; the unit group for the second piece."""
    if case is Case.GAMMA1:
        return (ring.zero,)
    if case is Case.GAMMA2:
        return tuple(sorted(units(ring), key=QuadInt.sort_key))
    return tuple(sorted({ring.zero, *units(ring)}, key=QuadInt.sort_key))


def truncation_spec(ring: RingDesc, case: Case, level: int, box_radius: int | None = None) -> TruncationSpec:
    ts = set(default_t_set(ring, case))
    if case is Case.FULL and box_radius is not None:
        ts.update(box(ring, box_radius))
    return TruncationSpec(ring, level, tuple(sorted(ts, key=QuadInt.sort_key)),
                          include_diag=case is not Case.GAMMA2)


def build_graph(vertices: Iterable[TcVertex]) -> ZdGraph:
    """Directed graph with an arc u -> v exactly when u.matrix @ v.matrix = O."""
    verts = list(vertices)
    if len({v.matrix for v in verts}) != len(verts):
        raise ValueError("duplicate vertex matrices")
    mats = [v.matrix for v in verts]
    arcs = [(i, j) for i, A in enumerate(mats) for j, B in enumerate(mats)
            if i != j and mat_mul(A, B).is_zero()]
    return ZdGraph(len(verts), arcs, verts)


def truncation_graph(ring: RingDesc, case: Case, level: int, box_radius: int | None = None) -> ZdGraph:
    return build_graph(family_vertices(truncation_spec(ring, case, level, box_radius)))


def gamma1(ring: RingDesc, n: int) -> ZdGraph:
    return truncation_graph(ring, Case.GAMMA1, n)


def gamma2(ring: RingDesc, n: int) -> ZdGraph:
    return truncation_graph(ring, Case.GAMMA2, n)


def adjacency_predicate(t: QuadInt, s: QuadInt, ring: RingDesc | None = None) -> Adjacency:
    """Closed-form arcs between lam*[1 t; t^2 t^3] and mu*[1 s; s^2 s^3].

    The product of the first by the second is (1 + t s^2) times a nonzero
    matrix, so the arcs do not depend on lam or mu.
    """
    if ring is not None and (t.ring != ring or s.ring != ring):
        raise ValueError("parameters not in the given ring")
    forward = not (1 + t * s * s)
    backward = not (1 + s * t * t)
    if forward and backward:
        return Adjacency.BOTH
    if forward:
        return Adjacency.AB_ZERO
    if backward:
        return Adjacency.CA_ZERO
    return Adjacency.NONE


def nontrivial_parameter_groups(ring: RingDesc) -> list[tuple[frozenset[QuadInt], bool]]:
    """Parameter sets of the non-K_1 components, with a flag for the diagonal family.

    Written out case by case from the known component structure, independently of
    :func:`adjacency_predicate`.
    """
    one = ring.one
    groups = [(frozenset({ring.zero}), True), (frozenset({one, -one}), False)]
    if ring.d == 1:
        i = ring.omega
        groups[1] = (frozenset({one, -one, i, -i}), False)
    elif ring.d == 3:
        w = ring.omega
        w2 = w * w
        groups += [(frozenset({w, -w}), False), (frozenset({w2, -w2}), False)]
    return groups


def all_zero_divisors(vertices: Iterable[TcVertex]) -> bool:
    return all(is_zero_divisor(v.matrix) for v in vertices)
