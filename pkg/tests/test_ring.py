import cmath

import pytest
from hypothesis import given, settings, strategies as st

from zdgraph.errors import RingMismatchError
from zdgraph.ring import (Form, QuadInt, RingDesc, UnitEquation, add, box, close, embed,
                          enumerate_by_norm, is_squarefree, mul, norm, solve_unit_eq, units)

coord = st.integers(-1000, 1000)
ds = st.sampled_from([0, 1, 2, 3, 5, 7])


def elem(draw_ring, a, b):
    return draw_ring(a, 0 if draw_ring.form is Form.RATIONAL else b)


@st.composite
def triples(draw):
    R = RingDesc.of(draw(ds))
    return [elem(R, draw(coord), draw(coord)) for _ in range(3)]


def test_forms():
    assert RingDesc.of(0).form is Form.RATIONAL
    assert RingDesc.of(1).form is Form.SQRT
    assert RingDesc.of(2).form is Form.SQRT
    assert RingDesc.of(5).form is Form.SQRT
    assert RingDesc.of(3).form is Form.HALF
    assert RingDesc.of(7).form is Form.HALF


@pytest.mark.parametrize("d", [4, 8, 9, 12, 18, -1])
def test_non_squarefree_rejected(d):
    with pytest.raises(ValueError):
        RingDesc.of(d)


def test_squarefree():
    assert [k for k in range(1, 20) if is_squarefree(k)] == [1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]


def test_rational_rejects_b():
    with pytest.raises(ValueError):
        RingDesc.of(0)(1, 1)


def test_add_examples():
    R = RingDesc.of(2)
    assert add(R(1, 0), R(0, 1)) == R(1, 1)
    assert add(R(2, 3), R(-2, -3)) == R.zero
    R3 = RingDesc.of(3)
    assert add(R3(1, 1), R3(0, -1)) == R3(1, 0)


def test_mul_examples():
    R1, R3 = RingDesc.of(1), RingDesc.of(3)
    assert mul(R1(0, 1), R1(0, 1)) == R1(-1, 0)
    assert mul(R3(0, 1), R3(0, 1)) == R3(-1, -1)
    for d in (0, 1, 2, 3, 5):
        R = RingDesc.of(d)
        x = R(4, 0 if d == 0 else -7)
        assert R.one * x == x


def test_mul_against_complex_oracle():
    for d in (1, 3):
        R = RingDesc.of(d)
        w = R.omega
        assert close(embed(w * w), embed(w) ** 2)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        RingDesc.of(1)(1, 1) + RingDesc.of(2)(1, 1)


def test_norm_examples():
    assert norm(RingDesc.of(1)(3, 4)) == 25
    assert norm(RingDesc.of(2).zero) == 0
    assert norm(RingDesc.of(3)(0, 1)) == 1


def test_big_integers_do_not_wrap():
    R = RingDesc.of(5)
    x = R(2**70, 3**50)
    y = x * x
    assert norm(y) == norm(x) ** 2


@settings(max_examples=1000, deadline=None)
@given(triples())
def test_ring_axioms(t):
    x, y, z = t
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x + y == y + x
    assert x * (y + z) == x * y + x * z
    assert x - x == x.ring.zero


@settings(max_examples=1000, deadline=None)
@given(triples())
def test_norm_multiplicative_and_embedding(t):
    x, y, _ = t
    assert norm(x * y) == norm(x) * norm(y)
    assert norm(x) >= 0 and (norm(x) == 0) == (not x)
    assert x * x.conj() == x.ring(norm(x))
    assert abs(embed(x * y) - embed(x) * embed(y)) < 1e-9 * max(1.0, abs(embed(x) * embed(y)))
    assert cmath.isclose(abs(embed(x)) ** 2, norm(x), rel_tol=1e-9, abs_tol=1e-9)


def test_units_closed_form():
    for d in (0, 2, 5, 6, 7, 10):
        R = RingDesc.of(d)
        assert units(R) == {R(1), R(-1)}
    R1 = RingDesc.of(1)
    assert units(R1) == {R1(1, 0), R1(-1, 0), R1(0, 1), R1(0, -1)}
    R3 = RingDesc.of(3)
    assert units(R3) == {R3(1), R3(-1), R3(0, 1), R3(0, -1), R3(-1, -1), R3(1, 1)}


def test_units_are_norm_one(ring):
    assert units(ring) == {x for x in enumerate_by_norm(ring, 1) if norm(x) == 1}
    for u in units(ring):
        assert u.exact_div(ring.one) == u
        assert ring.one.exact_div(u) is not None


def test_unit_equation_lists():
    def S(R, pairs):
        return frozenset((R(*x), R(*y)) for x, y in pairs)

    R2 = RingDesc.of(2)
    assert solve_unit_eq(R2, UnitEquation.X2Y) == S(R2, [((1, 0), (-1, 0)), ((-1, 0), (-1, 0))])
    assert solve_unit_eq(R2, UnitEquation.XY2) == S(R2, [((-1, 0), (1, 0)), ((-1, 0), (-1, 0))])
    R1 = RingDesc.of(1)
    assert solve_unit_eq(R1, UnitEquation.X2Y) == S(R1, [((1, 0), (-1, 0)), ((-1, 0), (-1, 0)),
                                                         ((0, 1), (1, 0)), ((0, -1), (1, 0))])
    assert solve_unit_eq(R1, UnitEquation.XY2) == S(R1, [((-1, 0), (1, 0)), ((-1, 0), (-1, 0)),
                                                         ((1, 0), (0, 1)), ((1, 0), (0, -1))])
    R3 = RingDesc.of(3)
    w = R3.omega
    w2 = w * w
    one = R3.one
    assert solve_unit_eq(R3, UnitEquation.X2Y) == {(one, -one), (-one, -one), (w, -w), (-w, -w),
                                                   (w2, -w2), (-w2, -w2)}
    assert solve_unit_eq(R3, UnitEquation.XY2) == {(-one, one), (-one, -one), (-w, w), (-w, -w),
                                                   (-w2, w2), (-w2, -w2)}


def test_unit_equation_no_solutions_outside_units(ring):
    # any solution divides -1, so a wider search finds nothing new
    wide = box(ring, 3)
    m1 = -ring.one
    for shape, f in ((UnitEquation.X2Y, lambda x, y: x * x * y), (UnitEquation.XY2, lambda x, y: x * y * y)):
        brute = {(x, y) for x in wide for y in wide if f(x, y) == m1}
        assert brute == solve_unit_eq(ring, shape)


def test_enumerate_by_norm():
    R1, R0, R5 = RingDesc.of(1), RingDesc.of(0), RingDesc.of(5)
    assert enumerate_by_norm(R1, 1) == {R1(1), R1(-1), R1(0, 1), R1(0, -1)}
    assert enumerate_by_norm(R0, 3) == {R0(1), R0(-1)}
    assert enumerate_by_norm(R5, 4) == {R5(1), R5(-1), R5(2), R5(-2)}
    with pytest.raises(ValueError):
        enumerate_by_norm(R1, 0)


def test_enumerate_by_norm_brute(ring):
    for bound in (1, 2, 5, 10):
        brute = {x for x in box(ring, 8) if x and norm(x) <= bound}
        assert enumerate_by_norm(ring, bound) == brute


def test_pow_and_str():
    R1 = RingDesc.of(1)
    assert R1.omega ** 4 == R1.one
    R3 = RingDesc.of(3)
    assert R3.omega ** 3 == R3.one
    assert str(R1(0, 1)) == "i" and str(R1(2, -1)) == "2-i"
    assert str(R3(-1, -1)) == "-1-w"
    assert str(RingDesc.of(2)(0, 3)) == "3sqrt(-2)"


def test_exact_div():
    R = RingDesc.of(1)
    x = R(3, 4) * R(1, 2)
    assert x.exact_div(R(1, 2)) == R(3, 4)
    assert R(1, 0).exact_div(R(1, 1)) is None
    with pytest.raises(ZeroDivisionError):
        R.one.exact_div(R.zero)


def test_quadint_requires_ints():
    with pytest.raises(TypeError):
        QuadInt(1.5, 0, RingDesc.of(2))
