"""2x2 matrices over O_K and the zero-divisor witnesses for twisted-cubic matrices."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInFamilyError, RingMismatchError
from .ring import QuadInt, RingDesc


@dataclass(frozen=True, slots=True)
class Mat2:
    e00: QuadInt
    e01: QuadInt
    e10: QuadInt
    e11: QuadInt

    def __post_init__(self):
        r = self.e00.ring
        if not (self.e01.ring == self.e10.ring == self.e11.ring == r):
            raise RingMismatchError("matrix entries from different rings")

    @property
    def ring(self) -> RingDesc:
        return self.e00.ring

    @classmethod
    def of(cls, ring: RingDesc, rows) -> Mat2:
        """Build from nested rows; entries may be ints or QuadInt."""
        (a, b), (c, d) = rows
        conv = [x if isinstance(x, QuadInt) else ring(x) for x in (a, b, c, d)]
        return cls(*conv)

    @classmethod
    def zero(cls, ring: RingDesc) -> Mat2:
        z = ring.zero
        return cls(z, z, z, z)

    @classmethod
    def identity(cls, ring: RingDesc) -> Mat2:
        return cls(ring.one, ring.zero, ring.zero, ring.one)

    def entries(self) -> tuple[QuadInt, QuadInt, QuadInt, QuadInt]:
        return (self.e00, self.e01, self.e10, self.e11)

    def is_zero(self) -> bool:
        return not (self.e00 or self.e01 or self.e10 or self.e11)

    def scale(self, lam: QuadInt) -> Mat2:
        return Mat2(lam * self.e00, lam * self.e01, lam * self.e10, lam * self.e11)

    def __matmul__(self, other: Mat2) -> Mat2:
        return mat_mul(self, other)

    def to_json(self) -> list:
        return [[self.e00.coords(), self.e01.coords()], [self.e10.coords(), self.e11.coords()]]

    def __str__(self) -> str:
        return f"[{self.e00} {self.e01}; {self.e10} {self.e11}]"


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    if A.ring != B.ring:
        raise RingMismatchError(f"{A.ring} vs {B.ring}")
    return Mat2(
        A.e00 * B.e00 + A.e01 * B.e10,
        A.e00 * B.e01 + A.e01 * B.e11,
        A.e10 * B.e00 + A.e11 * B.e10,
        A.e10 * B.e01 + A.e11 * B.e11,
    )


def product_is_zero(A: Mat2, B: Mat2) -> bool:
    return mat_mul(A, B).is_zero()


def det(A: Mat2) -> QuadInt:
    return A.e00 * A.e11 - A.e01 * A.e10


def is_zero_divisor(A: Mat2) -> bool:
    """Nonzero with vanishing determinant (O_K is a domain, so this suffices)."""
    return not A.is_zero() and not det(A)


def twisted_cubic_matrix(lam: QuadInt, t: QuadInt) -> Mat2:
    """lam * [1 t; t^2 t^3]."""
    t2 = t * t
    return Mat2(lam, lam * t, lam * t2, lam * t2 * t)


def diagonal_matrix(lam: QuadInt) -> Mat2:
    """[0 0; 0 lam]."""
    z = lam.ring.zero
    return Mat2(z, z, z, lam)


def classify(A: Mat2) -> tuple[str, QuadInt | None, QuadInt]:
    """Recognize A as ('tc1', t, lam) or ('tc2', None, lam).

    Raises NotInFamilyError if A is in neither family.
    """
    z = A.ring.zero
    if A.e00 == z:
        if A.e01 == z and A.e10 == z and A.e11 != z:
            return ("tc2", None, A.e11)
        raise NotInFamilyError(f"{A} is not a twisted-cubic matrix")
    lam = A.e00
    t = A.e01.exact_div(lam)
    if t is None or twisted_cubic_matrix(lam, t) != A:
        raise NotInFamilyError(f"{A} is not a twisted-cubic matrix")
    return ("tc1", t, lam)


def annihilator_witnesses(A: Mat2, t: QuadInt | None = None) -> tuple[Mat2, Mat2]:
    """Nonzero B, C with A @ B = O and C @ A = O.

    Free parameters of the templates are fixed to the simplest nonzero
    choice: for lam*[1 t; t^2 t^3] take B = [-t 0; 1 0], C = [-t^2 1; 0 0];
    for diag(0, lam) take B = [1 0; 0 0], C = [1 0; 1 0].
    Pass ``t`` to skip family recognition.
    """
    ring = A.ring
    one, z = ring.one, ring.zero
    if t is None:
        family, t, _ = classify(A)
    else:
        family = "tc1"
    if family == "tc2":
        return Mat2(one, z, z, z), Mat2(one, z, one, z)
    # B = [-c t, -d t; c, d] with (c, d) = (1, 0); C = [-beta t^2, beta; -delta t^2, delta] with (beta, delta) = (1, 0)
    B = Mat2(-t, z, one, z)
    C = Mat2(-(t * t), one, z, z)
    return B, C
