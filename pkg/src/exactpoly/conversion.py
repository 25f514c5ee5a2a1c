"""Conversions between constraint and generator descriptions.

* :func:`weyl_v_to_h` turns a generated cone into inequalities by lifting to
  ``{(y, x) : y >= 0, x = W y}`` and eliminating the multipliers ``y``.
* :func:`minkowski_h_to_v` goes the other way through the cone spanned by
  the constraint normals.
* :func:`decompose` / :func:`compose` move between ``{x : A x <= b}`` and
  ``conv(V) + cone(R)`` by homogenizing with an extra coordinate ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exactlin import DimensionError, Matrix, transpose, zeros
from .fourier_motzkin import feasible, implies, project, reduce
from .geometry import HalfSpace, HPolyhedron, Relation, VCone, VPolyhedron

__all__ = [
    "LiftedCone",
    "Homogenization",
    "lift_cone",
    "homogenize",
    "weyl_v_to_h",
    "minkowski_h_to_v",
    "duality_transfer",
    "decompose",
    "compose",
    "h_equal",
    "v_equal",
    "NotAConeError",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NotAConeError(ValueError):
    """The system has a nonzero right-hand side or a strict row."""


@dataclass(frozen=True)
class LiftedCone:
    """Block matrix ``[[-I_p, 0], [W, -I_n], [-W, I_n]]`` over ``(y, x)``."""

    matrix: Matrix
    p: int
    n: int

    def system(self) -> HPolyhedron:
        return HPolyhedron(self.matrix, zeros(self.matrix.nrows))


def lift_cone(C: VCone) -> LiftedCone:
    p, n = len(C.rays), C.dim
    rows = []
    for i in range(p):
        rows.append(tuple(-_ONE if j == i else _ZERO for j in range(p)) + zeros(n))
    W = C.matrix()
    for sign in (_ONE, -_ONE):
        for i in range(n):
            rows.append(
                tuple(sign * w for w in W.rows[i])
                + tuple(-sign if j == i else _ZERO for j in range(n))
            )
    return LiftedCone(Matrix(tuple(rows), p + n), p, n)


@dataclass(frozen=True)
class Homogenization:
    """``(m+1) x (n+1)`` matrix with rows ``(a_i, -b_i)`` and ``(0, ..., 0, -1)``."""

    matrix: Matrix

    def cone(self) -> HPolyhedron:
        return HPolyhedron(self.matrix, zeros(self.matrix.nrows))


def homogenize(P: HPolyhedron) -> Homogenization:
    rows = [a + (-bi,) for a, bi in zip(P.A.rows, P.b)]
    rows.append(zeros(P.dim) + (-_ONE,))
    return Homogenization(Matrix(tuple(rows), P.dim + 1))


def weyl_v_to_h(C: VCone) -> HPolyhedron:
    """Inequalities ``{x : A x <= 0}`` describing the cone generated by ``C.rays``."""
    n = C.dim
    if not C.rays:
        rows = []
        for sign in (_ONE, -_ONE):
            rows += [tuple(sign if j == i else _ZERO for j in range(n)) for i in range(n)]
        return HPolyhedron(Matrix(tuple(rows), n), zeros(len(rows)))
    projected, _ = project(lift_cone(C).system(), n)
    return reduce(projected)


def _require_cone(P: HPolyhedron) -> None:
    if any(bi != 0 for bi in P.b):
        raise NotAConeError("cone conversion needs a zero right-hand side")
    if P.is_strict():
        raise NotAConeError("cone conversion needs non-strict rows")


def minkowski_h_to_v(P: HPolyhedron) -> VCone:
    """Generators of the cone ``{x : A x <= 0}``.

    The rows of the result of :func:`weyl_v_to_h` applied to the cone spanned
    by the rows of ``A`` generate ``{x : A x <= 0}``.
    """
    _require_cone(P)
    dual = weyl_v_to_h(VCone(P.A.rows, P.dim))
    return VCone(dual.A.rows, P.dim)


def _cone_matrix_equal(H: HPolyhedron, generators: Matrix) -> bool:
    """``{x : H x <= 0} == cone(columns of generators)``."""
    return h_equal(H, weyl_v_to_h(VCone(transpose(generators).rows, generators.nrows)))


def duality_transfer(A: Matrix, B: Matrix) -> bool:
    """Check that ``P(A) = C(B)`` implies ``P(B^t) = C(A^t)`` on this pair.

    Vacuously true when the hypothesis fails.
    """
    if A.ncols != B.nrows:
        raise DimensionError(f"A has {A.ncols} columns but B has {B.nrows} rows")
    n = A.ncols
    if not _cone_matrix_equal(HPolyhedron(A, zeros(A.nrows)), B):
        return True
    Bt = transpose(B)
    return _cone_matrix_equal(HPolyhedron(Matrix(Bt.rows, n), zeros(Bt.nrows)), transpose(A))


def decompose(P: HPolyhedron) -> VPolyhedron:
    """Write ``P`` as ``conv(vertices) + cone(rays)``.

    An infeasible ``P`` gives :meth:`VPolyhedron.empty_set`.
    """
    if P.is_strict():
        raise ValueError("decompose expects non-strict rows")
    n = P.dim
    if not feasible(P):
        return VPolyhedron.empty_set(n)
    generators = minkowski_h_to_v(homogenize(P).cone())
    vertices, rays = [], []
    for g in generators.rays:
        w, t = g[:n], g[n]
        if t > 0:
            vertices.append(tuple(x / t for x in w))
        elif t == 0:
            rays.append(w)
        else:
            raise ArithmeticError("generator of the homogenized cone has negative t")
    return VPolyhedron.from_generators(vertices, rays, n)


def compose(V: VPolyhedron) -> HPolyhedron:
    """Inequalities ``{x : A x <= -c}`` for ``Q + C``, where ``(A | c)`` describes
    the cone generated by the lifted vertices ``(v, 1)`` and rays ``(r, 0)``."""
    n = V.dim
    if V.empty:
        return HPolyhedron(Matrix((zeros(n),), n), (-_ONE,))
    vertices = V.vertices or (zeros(n),)
    lifted = [v + (_ONE,) for v in vertices] + [r + (_ZERO,) for r in V.rays]
    H = weyl_v_to_h(VCone(tuple(lifted), n + 1))
    return reduce(HPolyhedron(Matrix(tuple(r[:n] for r in H.A.rows), n), tuple(-r[n] for r in H.A.rows)))


def h_equal(P: HPolyhedron, R: HPolyhedron) -> bool:
    """Set equality by mutual implication of every row."""
    if P.dim != R.dim:
        raise DimensionError(f"comparing systems in R^{P.dim} and R^{R.dim}")
    fp, fr = feasible(P), feasible(R)
    if not (fp and fr):
        return fp == fr
    for X, Y in ((P, R), (R, P)):
        for h in Y.halfspaces():
            if h.relation is Relation.LT:
                raise ValueError("h_equal expects non-strict rows")
            if not implies(X, h):
                return False
    return True


def v_equal(V: VPolyhedron, W: VPolyhedron) -> bool:
    if V.dim != W.dim:
        raise DimensionError(f"comparing sets in R^{V.dim} and R^{W.dim}")
    return h_equal(compose(V), compose(W))
