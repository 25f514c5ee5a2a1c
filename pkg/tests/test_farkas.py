import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from exactpoly.conversion import weyl_v_to_h
from exactpoly.exactlin import DimensionError, Matrix, dot, identity, mat_vec, transpose, vec
from exactpoly.farkas import FarkasOutcome, OutcomeKind, decide, verify
from exactpoly.geometry import VCone
from oracles import cone_member

A1T = Matrix.from_rows([[-1, 0, -1], [0, -1, 1]])


def test_identity_solution():
    out = decide(identity(2), (2, 3))
    assert out.kind is OutcomeKind.SOLUTION and out.y == vec(2, 3)
    assert verify(identity(2), (2, 3), out)


def test_identity_separator():
    out = decide(identity(2), (-1, 0))
    assert out.kind is OutcomeKind.SEPARATOR
    assert all(dot(out.v, c) <= 0 for c in identity(2).columns())
    assert dot(out.v, vec(-1, 0)) > 0
    assert verify(identity(2), (-1, 0), out)


def test_A1t_solution():
    b = vec(-2, -1)
    out = decide(A1T, b)
    assert out.is_solution
    assert mat_vec(A1T, out.y) == b and all(t >= 0 for t in out.y)
    assert verify(A1T, b, out)


def test_verify_rejects_bad_certificates():
    I2 = identity(2)
    assert verify(I2, (2, 3), FarkasOutcome(OutcomeKind.SOLUTION, y=vec(2, 3)))
    assert not verify(I2, (2, 3), FarkasOutcome(OutcomeKind.SEPARATOR, v=vec(1, 0)))
    assert not verify(I2, (2, 3), FarkasOutcome(OutcomeKind.SOLUTION, y=vec(-1, 3)))
    assert not verify(I2, (2, 3), FarkasOutcome(OutcomeKind.SOLUTION))
    assert not verify(I2, (2, 3), FarkasOutcome(OutcomeKind.SOLUTION, y=vec(2, 3), v=vec(1, 0)))
    assert not verify(I2, (2, 3), FarkasOutcome(OutcomeKind.SOLUTION, y=vec(2)))


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        decide(identity(2), (1, 2, 3))


def test_empty_generator_matrix():
    W = Matrix(((), ()), 0)
    assert decide(W, (0, 0)).is_solution
    out = decide(W, (0, 1))
    assert not out.is_solution and verify(W, (0, 1), out)


def _instance(seed):
    rng = random.Random(seed)
    n, p = rng.randint(1, 3), rng.randint(0, 4)
    W = Matrix(tuple(tuple(F(rng.randint(-3, 3)) for _ in range(p)) for _ in range(n)), p)
    b = vec(rng.randint(-3, 3) for _ in range(n))
    return W, b


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_decide_matches_oracle(seed):
    W, b = _instance(seed)
    out = decide(W, b)
    assert verify(W, b, out)
    assert out.is_solution == cone_member(W.columns(), b)
    if not out.is_solution:
        # separator is nonpositive on every generator
        assert all(dot(out.v, w) <= 0 for w in W.columns())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_no_solution_coexists_with_a_separator(seed):
    W, b = _instance(seed)
    H = weyl_v_to_h(VCone(transpose(W).rows, W.nrows))
    seps = [
        FarkasOutcome(OutcomeKind.SEPARATOR, v=r) for r in H.A.rows
        if verify(W, b, FarkasOutcome(OutcomeKind.SEPARATOR, v=r))
    ]
    if decide(W, b).is_solution:
        assert not seps
