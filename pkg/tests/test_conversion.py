import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from exactpoly import conversion as cv
from exactpoly import fourier_motzkin as fm
from exactpoly.exactlin import DimensionError, Matrix, identity, transpose, vec
from exactpoly.geometry import HPolyhedron, VCone, VPolyhedron, h_contains, vcone_contains
from oracles import cone_member, grid, h_mask, random_cone_h, random_h, random_rays

A1 = Matrix.from_rows([[-1, 0], [0, -1], [-1, 1]])
B1 = Matrix.from_rows([[1, 0], [1, 1]])
PA1 = HPolyhedron(A1, (0, 0, 0))
P1 = HPolyhedron.from_inequalities([[-1, 0], [0, -1], [-1, -1]], [0, 0, -1])
P2 = HPolyhedron.from_inequalities(
    [[-1, 1], [1, -1], [-1, -1], [-2, -1], [-1, -2]], [4, 4, -3, -4, -4]
)
Q1C1 = VPolyhedron.from_generators([(1, 0), (0, 1)], [(1, 0), (0, 1)], 2)
Q2C2 = VPolyhedron.from_generators([(0, 4), (1, 2), (2, 1), (4, 0)], [(1, 1)], 2)


def H(A, b, n=None):
    return HPolyhedron.from_inequalities(A, b, n)


def cone_only(rays, n):
    return VPolyhedron.from_generators([], rays, n)


def test_lift_cone_blocks():
    L = cv.lift_cone(VCone(((1, 2), (3, 4), (5, 6)), 2))
    assert L.matrix.shape == (7, 5)
    assert L.matrix.rows[0] == vec(-1, 0, 0, 0, 0)
    assert L.matrix.rows[3] == vec(1, 3, 5, -1, 0)
    assert L.matrix.rows[6] == vec(-2, -4, -6, 0, 1)


def test_homogenize_slice():
    Hm = cv.homogenize(P1).matrix
    assert Hm.shape == (4, 3)
    assert Hm.rows[2] == vec(-1, -1, 1) and Hm.rows[3] == vec(0, 0, -1)


def test_weyl_examples():
    got = cv.weyl_v_to_h(VCone(((-1, 0), (0, -1), (-1, 1)), 2))
    assert all(b == 0 for b in got.b)
    assert cv.h_equal(got, H([[1, 0], [1, 1]], [0, 0]))
    got = cv.weyl_v_to_h(VCone(((1, 0), (1, 1)), 2))
    assert cv.h_equal(got, H([[0, -1], [-1, 1]], [0, 0]))
    zero = cv.weyl_v_to_h(VCone((), 2))
    assert cv.h_equal(zero, H([[1, 0], [0, 1], [-1, 0], [0, -1]], [0] * 4))


def test_minkowski_examples():
    C = cv.minkowski_h_to_v(PA1)
    assert cv.v_equal(cone_only(C.rays, 2), cone_only([(1, 0), (1, 1)], 2))
    C = cv.minkowski_h_to_v(H([[1, 0], [1, 1]], [0, 0]))
    assert cv.v_equal(cone_only(C.rays, 2), cone_only([(-1, 0), (0, -1), (-1, 1)], 2))
    C = cv.minkowski_h_to_v(H([[1], [-1]], [0, 0]))
    assert all(r == vec(0) for r in C.rays)


def test_minkowski_rejects_non_cones():
    with pytest.raises(cv.NotAConeError):
        cv.minkowski_h_to_v(P1)


def test_duality_transfer_examples():
    assert cv.duality_transfer(A1, transpose(B1))
    assert cv.duality_transfer(identity(2), identity(2))
    with pytest.raises(DimensionError):
        cv.duality_transfer(A1, identity(3))


def test_duality_transfer_hypothesis_fails_on_identity():
    assert not cv._cone_matrix_equal(HPolyhedron(identity(2), (0, 0)), identity(2))


def test_decompose_examples():
    V = cv.decompose(P1)
    assert cv.v_equal(V, Q1C1)
    V = cv.decompose(P2)
    assert cv.v_equal(V, Q2C2)
    pinned = cv.decompose(H([[1], [-1]], [0, 0]))
    assert all(v == vec(0) for v in pinned.vertices) and all(r == vec(0) for r in pinned.rays)
    assert cv.v_equal(pinned, VPolyhedron.from_generators([], [], 1))


def test_decompose_infeasible_is_tagged():
    V = cv.decompose(H([[1], [-1]], [0, -1]))
    assert V.empty and not V.vertices
    R = cv.compose(V)
    assert R.A.rows == (vec(0),) and R.b == vec(-1)
    assert cv.h_equal(R, H([[1], [-1]], [0, -1]))


def test_compose_examples():
    assert cv.h_equal(cv.compose(Q1C1), P1)
    assert cv.h_equal(cv.compose(Q2C2), P2)
    origin = cv.compose(VPolyhedron.from_generators([], [], 2))
    assert cv.h_equal(origin, H([[1, 0], [0, 1], [-1, 0], [0, -1]], [0] * 4))


def test_h_equal_examples():
    assert cv.h_equal(PA1, H([[0, -1], [-1, 1]], [0, 0]))
    assert not cv.h_equal(H([[1]], [0]), H([[1]], [1]))
    shuffled = HPolyhedron(Matrix(P2.A.rows[::-1], 2), P2.b[::-1])
    assert cv.h_equal(P2, shuffled)
    with pytest.raises(DimensionError):
        cv.h_equal(P1, H([[1]], [0]))


def test_v_equal_examples():
    T = VPolyhedron.from_generators([(0, 0), (2, 0), (0, 2)], [], 2)
    T5 = VPolyhedron.from_generators([(0, 0), (2, 0), (1, 1), (1, F(1, 2)), (0, 2)], [], 2)
    assert cv.v_equal(T, T5)
    D = VPolyhedron.from_generators([(1, 0), (0, 1)], [], 2)
    Dr = VPolyhedron.from_generators([(0, 1), (1, 0)], [], 2)
    assert cv.v_equal(D, Dr)
    assert not cv.v_equal(cone_only([(1, 0)], 2), cone_only([(1, 0), (0, 1)], 2))


def test_decompose_generators_have_nonnegative_t():
    for P in (P1, P2, PA1):
        G = cv.minkowski_h_to_v(cv.homogenize(P).cone())
        assert all(g[-1] >= 0 for g in G.rays)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 4), st.integers(0, 2**32))
def test_weyl_sound_and_complete(n, p, seed):
    rays = random_rays(random.Random(seed), n, p)
    Hc = cv.weyl_v_to_h(VCone(tuple(rays), n))
    for r in rays:
        assert h_contains(Hc, r)
    pts = grid(n, -2, 2, 2)
    inside = pts[h_mask(Hc, pts, 2)]
    for g in inside[:: max(1, len(inside) // 25)]:
        assert cone_member(rays, [F(int(v), 2) for v in g])


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 4), st.integers(0, 2**32))
def test_minkowski_round_trip(n, m, seed):
    P = random_cone_h(random.Random(seed), n, m)
    back = cv.weyl_v_to_h(cv.minkowski_h_to_v(P))
    assert cv.h_equal(P, back)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 4), st.integers(0, 2**32))
def test_weyl_round_trip(n, p, seed):
    rays = random_rays(random.Random(seed), n, p)
    C = VCone(tuple(rays), n)
    Hc = cv.weyl_v_to_h(C)
    G = cv.minkowski_h_to_v(Hc)
    for r in rays:
        assert vcone_contains(G, r)
    for g in G.rays:
        assert h_contains(Hc, g)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 5), st.integers(0, 2**32))
def test_decompose_compose_fixed_point(n, m, seed):
    P = random_h(random.Random(seed), n, m)
    V = cv.decompose(P)
    assert V.empty == (not fm.feasible(P))
    assert cv.h_equal(P, cv.compose(V))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 5), st.integers(0, 2**32))
def test_decomposition_sum_law(n, m, seed):
    P = random_h(random.Random(seed), n, m)
    V = cv.decompose(P)
    for q in V.vertices:
        for r in V.rays or (vec([0] * n),):
            for t in (0, 1, 3):
                assert h_contains(P, tuple(a + t * b for a, b in zip(q, r)))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 3), st.integers(0, 5), st.integers(0, 2**32))
def test_homogenization_slice(n, m, seed):
    rng = random.Random(seed)
    P = random_h(rng, n, m)
    Ph = cv.homogenize(P).cone()
    for _ in range(5):
        x = tuple(F(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(n))
        assert h_contains(P, x) == h_contains(Ph, x + (F(1),))


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4), st.integers(0, 2**32))
def test_duality_transfer_by_construction(n, m, seed):
    P = random_cone_h(random.Random(seed), n, m)
    C = cv.minkowski_h_to_v(P)
    assert cv.duality_transfer(P.A, C.matrix())
