"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line with its runtime.
Run ``pytest tests/test_acceptance.py -v`` or execute this file directly.
"""

import io
import random
import sys
import time
from fractions import Fraction as F
from pathlib import Path

import numpy as np
import pytest

from exactpoly import conversion as cv
from exactpoly import fourier_motzkin as fm
from exactpoly.cli import run
from exactpoly.exactlin import Matrix, transpose
from exactpoly.farkas import FarkasOutcome, OutcomeKind, decide, verify
from exactpoly.geometry import HPolyhedron, VCone, VPolyhedron, h_contains, vcone_contains
from oracles import GRID_RES, cone_member, grid, h_mask, random_cone_h, random_h, random_rays

HERE = Path(__file__).parent

A1 = Matrix.from_rows([[-1, 0], [0, -1], [-1, 1]])
B1 = Matrix.from_rows([[1, 0], [1, 1]])
P1 = HPolyhedron.from_inequalities([[-1, 0], [0, -1], [-1, -1]], [0, 0, -1])
P2 = HPolyhedron.from_inequalities(
    [[-1, 1], [1, -1], [-1, -1], [-2, -1], [-1, -2]], [4, 4, -3, -4, -4]
)


def _report(number, ok, seconds, limit, detail="", capsys=None):
    status = "PASS" if ok else "FAIL"
    lim = f" (limit {limit} s)" if limit else ""
    line = f"criterion {number}: {status} in {seconds:.2f} s{lim} {detail}".rstrip()
    if capsys is None:
        print(line, flush=True)
    else:
        with capsys.disabled():
            print("\n" + line, flush=True)


def _timed(number, limit, body, capsys=None):
    t0 = time.perf_counter()
    failure = None
    detail = ""
    try:
        detail = body() or ""
    except AssertionError as exc:
        failure = exc
    secs = time.perf_counter() - t0
    ok = failure is None and (limit is None or secs < limit)
    _report(number, ok, secs, limit, detail if failure is None else f"[{failure}]", capsys)
    if failure is not None:
        raise failure
    assert limit is None or secs < limit, f"took {secs:.2f} s, limit {limit} s"


def _suite(seed=2024, count=300):
    """The shared random instances of criteria 4 and 5."""
    rng = random.Random(seed)
    return [random_h(rng, rng.randint(1, 4), rng.randint(0, 6)) for _ in range(count)]


def criterion_1():
    got = cv.weyl_v_to_h(VCone(((-1, 0), (0, -1), (-1, 1)), 2))
    assert cv.h_equal(got, HPolyhedron.from_inequalities([[1, 0], [1, 1]], [0, 0])), "weyl"
    C = cv.minkowski_h_to_v(HPolyhedron(A1, (0, 0, 0)))
    expected = VPolyhedron.from_generators([], [(1, 0), (1, 1)], 2)
    assert cv.v_equal(VPolyhedron.from_generators([], C.rays, 2), expected), "minkowski"
    assert cv.duality_transfer(A1, transpose(B1)), "duality transfer"
    assert cv._cone_matrix_equal(HPolyhedron(A1, (0, 0, 0)), transpose(B1)), "hypothesis holds"


def criterion_2():
    V = cv.decompose(P1)
    assert cv.h_equal(P1, cv.compose(V)), "round trip"
    expected = VPolyhedron.from_generators([(1, 0), (0, 1)], [(1, 0), (0, 1)], 2)
    assert cv.v_equal(V, expected), "decomposition"


def criterion_3():
    expected = VPolyhedron.from_generators([(0, 4), (1, 2), (2, 1), (4, 0)], [(1, 1)], 2)
    assert cv.v_equal(cv.decompose(P2), expected), "decomposition"
    assert cv.h_equal(cv.compose(expected), P2), "composition"


def criterion_4():
    calls = 0
    for P in _suite():
        pending = [P]
        while pending:
            S = pending.pop()
            for k in range(S.dim):
                Q, step = fm.eliminate_one(S, k)
                col = [a[k] for a in S.A.rows]
                pos = sum(1 for c in col if c > 0)
                neg = sum(1 for c in col if c < 0)
                assert Q.m == pos * neg + (len(col) - pos - neg), (S, k)
                assert (len(step.positive), len(step.negative)) == (pos, neg)
                calls += 1
                if k == 0 and Q.dim:
                    pending.append(Q)
    return f"{calls} eliminate_one calls"


def _contains_scaled(P, X, D):
    """``X[i] / D[i]`` in P, checked with integers (P has integer data)."""
    A = [[int(a) for a in row] for row in P.A.rows]
    b = [int(x) for x in P.b]
    big = max((abs(v) for v in X.ravel()), default=0) > 2**40 or max(D, default=0) > 2**40
    if not big:
        lhs = X @ np.asarray(A, dtype=np.int64).T if A else np.zeros((len(X), 0), dtype=np.int64)
        rhs = np.outer(D, np.asarray(b, dtype=np.int64)) if b else lhs
        return np.all(lhs <= rhs, axis=1)
    return np.array([
        all(sum(a * int(x) for a, x in zip(row, xs)) <= bi * int(d) for row, bi in zip(A, b))
        for xs, d in zip(X, D)
    ])


def criterion_5():
    checked_sound = checked_lift = 0
    for P in _suite():
        n = P.dim
        Q, trace = fm.project(P, n - 1)
        pts = grid(n)
        inside = pts[h_mask(P, pts)]
        # soundness: drop the first coordinate of every grid point of P
        assert np.all(h_mask(Q, inside[:, 1:])), P
        checked_sound += len(inside)
        # completeness: lift every grid point of the projection back into P
        proj_pts = grid(n - 1)
        proj_in = proj_pts[h_mask(Q, proj_pts)]
        lifted = fm.lift_scaled(trace, [(list(map(int, g)), GRID_RES) for g in proj_in])
        if not lifted:
            continue
        X = np.array([x for x, _ in lifted], dtype=object)
        D = np.array([d for _, d in lifted], dtype=object)
        small = all(abs(int(v)) < 2**40 for v in X.ravel()) and all(d < 2**40 for d in D)
        if small:
            X, D = X.astype(np.int64), D.astype(np.int64)
            kept_ok = np.array_equal(X[:, 1:] * GRID_RES, proj_in * D[:, None])
        else:
            kept_ok = all(
                int(x) * GRID_RES == int(g) * int(d)
                for row, grow, d in zip(X, proj_in, D) for x, g in zip(row[1:], grow)
            )
        assert kept_ok, ("kept coordinates changed", P)
        assert np.all(_contains_scaled(P, X, D)), ("lifted point outside", P)
        checked_lift += len(lifted)
    return f"{checked_sound} sound points, {checked_lift} lifted points"


def criterion_6():
    rng = random.Random(606)
    sol = sep = 0
    for _ in range(300):
        n, p = rng.randint(1, 3), rng.randint(0, 4)
        W = Matrix(tuple(tuple(F(rng.randint(-3, 3)) for _ in range(p)) for _ in range(n)), p)
        b = tuple(F(rng.randint(-3, 3)) for _ in range(n))
        out = decide(W, b)
        assert verify(W, b, out), (W, b)
        assert out.is_solution == cone_member(W.columns(), b), (W, b)
        A = cv.weyl_v_to_h(VCone(transpose(W).rows, n)).A
        separators = [r for r in A.rows if verify(W, b, FarkasOutcome(OutcomeKind.SEPARATOR, v=r))]
        if out.is_solution:
            assert not separators, (W, b)
            sol += 1
        else:
            assert out.v in separators
            sep += 1
    return f"{sol} solutions, {sep} separators"


def criterion_7():
    rng = random.Random(707)
    done = 0
    while done < 100:
        n = rng.randint(1, 3)
        P = random_h(rng, n, rng.randint(1, 5))
        if not fm.feasible(P):
            continue
        assert cv.h_equal(P, cv.compose(cv.decompose(P))), P
        H = random_cone_h(rng, n, rng.randint(0, 4))
        assert cv.h_equal(H, cv.weyl_v_to_h(cv.minkowski_h_to_v(H))), H
        C = VCone(tuple(random_rays(rng, n, rng.randint(0, 4))), n)
        Hc = cv.weyl_v_to_h(C)
        G = cv.minkowski_h_to_v(Hc)
        assert all(vcone_contains(G, r) for r in C.rays), C
        assert all(h_contains(Hc, g) for g in G.rays), C
        done += 1
    return f"{done} instances"


GOLDEN_RUNS = [
    (["decompose", "P1.ine"], "decompose_P1.ext"),
    (["decompose", "P2.ine"], "decompose_P2.ext"),
    (["decompose", "PA1.ine"], "decompose_PA1.ext"),
    (["project", "P1.ine", "--keep", "1"], "project_P1_keep1.ine"),
    (["project", "P2.ine", "--keep", "1"], "project_P2_keep1.ine"),
    (["project", "PA1.ine", "--keep", "1"], "project_PA1_keep1.ine"),
    (["farkas", "A1t.mat", "b_in.vec"], "farkas_A1t_b_in.txt"),
    (["farkas", "A1t.mat", "b_out.vec"], "farkas_A1t_b_out.txt"),
    (["equal", "P1.ine", "Q1C1.ext"], "equal_P1_Q1C1.txt"),
    (["equal", "P2.ine", "Q2C2.ext"], "equal_P2_Q2C2.txt"),
    (["equal", "PA1.ine", "CB1t.ext"], "equal_PA1_CB1t.txt"),
    (["equal", "P1.ine", "P2.ine"], "equal_P1_P2.txt"),
]


def criterion_8():
    for argv, golden in GOLDEN_RUNS:
        args = [str(HERE / "fixtures" / a) if a.endswith((".ine", ".ext", ".mat", ".vec")) else a
                for a in argv]
        out = io.StringIO()
        run(args, out, io.StringIO())
        expected = (HERE / "golden" / golden).read_bytes()
        assert out.getvalue().encode("utf-8") == expected, golden
    return f"{len(GOLDEN_RUNS)} golden files"


LIMITS = {1: 1, 2: 1, 3: 5, 4: None, 5: 60, 6: 30, 7: 120, 8: None}
CRITERIA = {i: globals()[f"criterion_{i}"] for i in LIMITS}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    _timed(number, LIMITS[number], CRITERIA[number], capsys)


if __name__ == "__main__":
    failed = 0
    for i in sorted(CRITERIA):
        try:
            _timed(i, LIMITS[i], CRITERIA[i])
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
