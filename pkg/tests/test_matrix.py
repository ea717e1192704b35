import random

import pytest

from zdgraph import RingDesc
from zdgraph.construct import Case, truncation_graph
from zdgraph.errors import NotInFamilyError, RingMismatchError
from zdgraph.matrix import (Mat2, annihilator_witnesses, classify, det, diagonal_matrix,
                            is_zero_divisor, mat_mul, product_is_zero, twisted_cubic_matrix)

R0 = RingDesc.of(0)


def M(rows, R=R0):
    return Mat2.of(R, rows)


def test_mul_examples():
    A = M([[1, 2], [3, 4]])
    assert mat_mul(A, Mat2.identity(R0)) == A
    assert mat_mul(M([[1, -1], [1, -1]]), M([[1, 1], [1, 1]])).is_zero()
    assert mat_mul(M([[1, 1], [1, 1]]), M([[1, -1], [1, -1]])) == M([[2, -2], [2, -2]])
    assert A @ A == M([[7, 10], [15, 22]])


def test_mul_ring_mismatch():
    with pytest.raises(RingMismatchError):
        mat_mul(Mat2.identity(RingDesc.of(1)), Mat2.identity(RingDesc.of(2)))


def test_det_examples():
    assert det(Mat2.zero(R0)) == R0.zero
    assert det(twisted_cubic_matrix(R0(3), R0(2))) == R0.zero
    assert det(Mat2.identity(R0)) == R0.one


def test_zero_divisor_predicate():
    assert is_zero_divisor(M([[1, 0], [0, 0]]))
    assert not is_zero_divisor(Mat2.zero(R0))
    assert not is_zero_divisor(Mat2.identity(R0))


def test_det_multiplicative_random():
    rng = random.Random(7)
    for d in (0, 1, 2, 3, 5):
        R = RingDesc.of(d)
        b = (lambda: 0) if d == 0 else (lambda: rng.randint(-9, 9))
        for _ in range(200):
            A = Mat2(*(R(rng.randint(-9, 9), b()) for _ in range(4)))
            B = Mat2(*(R(rng.randint(-9, 9), b()) for _ in range(4)))
            assert det(A @ B) == det(A) * det(B)


def test_witness_examples():
    A = twisted_cubic_matrix(R0(2), R0(3))
    assert A == M([[2, 6], [18, 54]])
    B, C = annihilator_witnesses(A)
    assert B == M([[-3, 0], [1, 0]])
    assert (A @ B).is_zero() and (C @ A).is_zero()
    D = diagonal_matrix(R0(5))
    B, C = annihilator_witnesses(D)
    assert B == M([[1, 0], [0, 0]]) and C == M([[1, 0], [1, 0]])
    assert product_is_zero(D, B) and product_is_zero(C, D)


def test_witnesses_on_every_truncation_vertex():
    for d in (0, 1, 2, 3, 5):
        R = RingDesc.of(d)
        G = truncation_graph(R, Case.FULL, 3, box_radius=2)
        for v in G.labels:
            B, C = annihilator_witnesses(v.matrix)
            assert not B.is_zero() and not C.is_zero()
            assert (v.matrix @ B).is_zero() and (C @ v.matrix).is_zero()
            assert is_zero_divisor(v.matrix)


def test_classify():
    R = RingDesc.of(1)
    i = R.omega
    assert classify(twisted_cubic_matrix(R(2), i)) == ("tc1", i, R(2))
    assert classify(diagonal_matrix(R(-3))) == ("tc2", None, R(-3))
    with pytest.raises(NotInFamilyError):
        classify(Mat2.identity(R))
    with pytest.raises(NotInFamilyError):
        annihilator_witnesses(Mat2.of(R, [[2, 1], [0, 0]]))


def test_str_and_json():
    A = M([[1, -1], [0, 2]])
    assert str(A) == "[1 -1; 0 2]"
    assert A.to_json() == [[[1, 0], [-1, 0]], [[0, 0], [2, 0]]]
