"""Exact arithmetic in the ring of integers of Q(sqrt(-d)).

Elements are stored as integer coordinates ``(a, b)`` on the integral basis
``{1, w}`` where ``w`` is ``sqrt(-d)`` when d = 1, 2 (mod 4) and
``(-1 + sqrt(-d)) / 2`` when d = 3 (mod 4).  d = 0 stands for the rational
integers, in which case ``b`` is always zero.

Python integers are unbounded, so no product can overflow.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from itertools import product

from .errors import RingMismatchError


class Form(enum.Enum):
    RATIONAL = "rational"
    SQRT = "sqrt"
    HALF = "half"


def is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True, slots=True)
class RingDesc:
    """Describes O_K for K = Q(sqrt(-d)); build instances with :meth:`of`."""

    d: int
    form: Form

    @classmethod
    def of(cls, d: int) -> RingDesc:
        d = int(d)
        if d == 0:
            return cls(0, Form.RATIONAL)
        if not is_squarefree(d):
            raise ValueError(f"d={d} must be 0 or a positive square-free integer")
        return cls(d, Form.HALF if d % 4 == 3 else Form.SQRT)

    def __call__(self, a: int = 0, b: int = 0) -> QuadInt:
        return QuadInt(a, b, self)

    @property
    def zero(self) -> QuadInt:
        return QuadInt(0, 0, self)

    @property
    def one(self) -> QuadInt:
        return QuadInt(1, 0, self)

    @property
    def omega(self) -> QuadInt:
        """The basis element w (not defined for d = 0)."""
        if self.form is Form.RATIONAL:
            raise ValueError("Z has no second basis element")
        return QuadInt(0, 1, self)

    def basis_value(self) -> complex:
        if self.form is Form.RATIONAL:
            return 0j
        root = 1j * math.sqrt(self.d)
        return root if self.form is Form.SQRT else (-1 + root) / 2

    def __str__(self) -> str:
        if self.form is Form.RATIONAL:
            return "Z"
        if self.form is Form.SQRT:
            return f"Z[sqrt(-{self.d})]"
        return f"Z[(-1+sqrt(-{self.d}))/2]"


@dataclass(frozen=True, slots=True)
class QuadInt:
    a: int
    b: int
    ring: RingDesc

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("coordinates must be Python integers")
        if self.ring.form is Form.RATIONAL and self.b != 0:
            raise ValueError("elements of Z have b = 0")

    def _coerce(self, other) -> QuadInt:
        if isinstance(other, QuadInt):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return QuadInt(other, 0, self.ring)
        return NotImplemented

    def __add__(self, other) -> QuadInt:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadInt(self.a + other.a, self.b + other.b, self.ring)

    __radd__ = __add__

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b, self.ring)

    def __sub__(self, other) -> QuadInt:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadInt(self.a - other.a, self.b - other.b, self.ring)

    def __rsub__(self, other) -> QuadInt:
        return -(self - other)

    def __mul__(self, other) -> QuadInt:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, e = self.a, self.b, other.a, other.b
        form = self.ring.form
        if form is Form.RATIONAL:
            return QuadInt(a * c, 0, self.ring)
        if form is Form.SQRT:
            # w^2 = -d
            return QuadInt(a * c - self.ring.d * b * e, a * e + b * c, self.ring)
        # w^2 = -w - (d+1)/4
        be = b * e
        return QuadInt(a * c - be * ((self.ring.d + 1) // 4), a * e + b * c - be, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadInt:
        if k < 0:
            raise ValueError("negative powers are not ring elements")
        out, base = self.ring.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def conj(self) -> QuadInt:
        if self.ring.form is Form.HALF:
            # conj(w) = -1 - w
            return QuadInt(self.a - self.b, -self.b, self.ring)
        return QuadInt(self.a, -self.b, self.ring)

    def norm(self) -> int:
        return norm(self)

    def embed(self) -> complex:
        return self.a + self.b * self.ring.basis_value()

    def exact_div(self, other: QuadInt) -> QuadInt | None:
        """Return ``self / other`` if it lies in the ring, else None."""
        other = self._coerce(other)
        n = norm(other)
        if n == 0:
            raise ZeroDivisionError("division by zero in O_K")
        num = self * other.conj()
        if num.a % n or num.b % n:
            return None
        return QuadInt(num.a // n, num.b // n, self.ring)

    def sort_key(self) -> tuple[int, int]:
        return (self.a, self.b)

    def coords(self) -> list[int]:
        return [self.a, self.b]

    def __str__(self) -> str:
        if self.ring.form is Form.RATIONAL or self.b == 0:
            return str(self.a)
        if self.ring.form is Form.HALF:
            sym = "w"
        else:
            sym = "i" if self.ring.d == 1 else f"sqrt(-{self.ring.d})"
        coef = {1: "", -1: "-"}.get(self.b, f"{self.b}")
        if self.a == 0:
            return f"{coef}{sym}"
        sign = "+" if self.b > 0 else ""
        return f"{self.a}{sign}{coef}{sym}"


def add(x: QuadInt, y: QuadInt) -> QuadInt:
    return x + y


def mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def norm(x: QuadInt) -> int:
    """Field norm N(x) = x * conj(x), a non-negative integer."""
    a, b = x.a, x.b
    form = x.ring.form
    if form is Form.RATIONAL:
        return a * a
    if form is Form.SQRT:
        return a * a + x.ring.d * b * b
    return a * a - a * b + b * b * ((x.ring.d + 1) // 4)


def units(ring: RingDesc) -> frozenset[QuadInt]:
    """The unit group: {+-1}, {+-1, +-i} (d=1) or the sixth roots of unity (d=3)."""
    one = ring.one
    if ring.d == 1:
        i = ring.omega
        return frozenset({one, -one, i, -i})
    if ring.d == 3:
        w = ring.omega
        w2 = w * w
        return frozenset({one, -one, w, -w, w2, -w2})
    return frozenset({one, -one})


class UnitEquation(enum.Enum):
    X2Y = "x^2*y=-1"
    XY2 = "x*y^2=-1"


def solve_unit_eq(ring: RingDesc, shape: UnitEquation) -> frozenset[tuple[QuadInt, QuadInt]]:
    """All (x, y) in R^2 with x^2 y = -1 (or x y^2 = -1).

    Any solution has x and y invertible, so searching units x units is complete.
    """
    minus_one = -ring.one
    us = units(ring)
    if shape is UnitEquation.X2Y:
        return frozenset((x, y) for x, y in product(us, us) if x * x * y == minus_one)
    return frozenset((x, y) for x, y in product(us, us) if x * y * y == minus_one)


def enumerate_by_norm(ring: RingDesc, bound: int) -> frozenset[QuadInt]:
    """Nonzero elements of norm at most ``bound``."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out = set()
    if ring.form is Form.RATIONAL:
        r = math.isqrt(bound)
        return frozenset(ring(a) for a in range(-r, r + 1) if a)
    d = ring.d
    # |b| * sqrt(d) <= 2 sqrt(bound) covers both bases
    bmax = math.isqrt(4 * bound // d) + 1
    for b in range(-bmax, bmax + 1):
        amax = math.isqrt(bound) + abs(b) + 1
        for a in range(-amax, amax + 1):
            x = QuadInt(a, b, ring)
            if x and norm(x) <= bound:
                out.add(x)
    return frozenset(out)


def box(ring: RingDesc, radius: int) -> list[QuadInt]:
    """Elements whose coordinates lie in [-radius, radius], sorted."""
    bs = [0] if ring.form is Form.RATIONAL else range(-radius, radius + 1)
    return sorted((ring(a, b) for a in range(-radius, radius + 1) for b in bs),
                  key=QuadInt.sort_key)


def embed(x: QuadInt) -> complex:
    return x.embed()


def close(z: complex, w: complex, tol: float = 1e-9) -> bool:
    return cmath.isclose(z, w, abs_tol=tol)
