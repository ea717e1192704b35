import pytest

from zdgraph import RingDesc
from zdgraph.construct import Case, Family, truncation_graph
from zdgraph.geometry import ProjPoint3, nu, on_segre, on_twisted_cubic, phi, proj_equal
from zdgraph.matrix import Mat2, diagonal_matrix, twisted_cubic_matrix

R0 = RingDesc.of(0)


def P(*zs, R=R0):
    return ProjPoint3(*(R(z) for z in zs))


def test_nu_examples():
    assert nu(R0(1), R0(2)) == P(1, 2, 4, 8)
    assert nu(R0(0), R0(1)) == P(0, 0, 0, 1)
    assert nu(R0(1), R0(0)) == P(1, 0, 0, 0)
    with pytest.raises(ValueError):
        nu(R0(0), R0(0))


def test_zero_point_rejected():
    with pytest.raises(ValueError):
        P(0, 0, 0, 0)


def test_on_segre_examples():
    assert on_segre(P(1, 2, 4, 8))
    assert not on_segre(P(1, 0, 0, 1))
    assert on_segre(P(0, 0, 0, 1))


def test_phi_examples():
    assert phi(twisted_cubic_matrix(R0(2), R0(3))) == P(1, 3, 9, 27)
    assert phi(diagonal_matrix(R0(5))) == P(0, 0, 0, 1)
    assert phi(Mat2.identity(R0)) == P(1, 0, 0, 1)
    with pytest.raises(ValueError):
        phi(Mat2.zero(R0))


def test_projective_equality_is_not_coordinatewise():
    assert P(2, 6, 18, 54) == P(1, 3, 9, 27)
    assert P(2, 6, 18, 54) != P(1, 3, 9, 28)
    assert not proj_equal(P(1, 0, 0, 0), P(0, 0, 0, 1))


def test_nu_scaling():
    for d in (0, 1, 2, 3):
        R = RingDesc.of(d)
        for mu in (R(1), R(-1), R(3), R(2, 0 if d == 0 else 1)):
            for x0, x1 in ((R(1), R(2)), (R(0), R(1)), (R(-2), R(5))):
                assert nu(mu * x0, mu * x1) == nu(x0, x1)


def test_every_vertex_lies_on_cubic_and_quadric():
    for d in (0, 1, 2, 3, 5):
        R = RingDesc.of(d)
        for N in (1, 2, 3):
            G = truncation_graph(R, Case.FULL, N, box_radius=2)
            for v in G.labels:
                Q = phi(v.matrix)
                assert on_segre(Q)
                assert on_twisted_cubic(Q)
                if v.family is Family.TC1:
                    assert Q == nu(R.one, v.t)
                else:
                    assert Q == nu(R.zero, R.one)


def test_off_cubic_point():
    assert not on_twisted_cubic(P(1, 0, 0, 1))
    # on the quadric but not on the cubic
    assert on_segre(P(1, 1, 2, 2)) and not on_twisted_cubic(P(1, 1, 2, 2))


def test_unhashable():
    with pytest.raises(TypeError):
        hash(P(1, 2, 4, 8))
