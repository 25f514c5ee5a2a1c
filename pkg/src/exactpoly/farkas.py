"""Farkas alternative with a checkable certificate for either outcome.

For ``W`` (n x p) and ``b`` in R^n exactly one holds:

* there is ``y >= 0`` with ``W y = b``;
* there is ``v`` with ``v^t W <= 0`` and ``v^t b > 0``.

:func:`decide` computes an H-representation ``{x : A x <= 0}`` of the cone
generated by the columns of ``W``. If ``A b <= 0`` the point is in the cone
and ``y`` is recovered by elimination; otherwise a violated row of ``A`` is
the separator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactlin import DimensionError, Matrix, Vector, dot, mat_vec, transpose, vec

__all__ = ["OutcomeKind", "FarkasOutcome", "decide", "verify"]


class OutcomeKind(enum.Enum):
    SOLUTION = "SOLUTION"
    SEPARATOR = "SEPARATOR"


@dataclass(frozen=True)
class FarkasOutcome:
    kind: OutcomeKind
    y: Optional[Vector] = None
    v: Optional[Vector] = None

    @property
    def is_solution(self) -> bool:
        return self.kind is OutcomeKind.SOLUTION


def _nonnegative_solution(W: Matrix, b: Vector) -> Optional[Vector]:
    from .fourier_motzkin import witness
    from .geometry import HalfSpace, HPolyhedron

    p = W.ncols
    zero = Fraction(0)
    rows = [HalfSpace(r, bi) for r, bi in zip(W.rows, b)]
    rows += [HalfSpace(tuple(-x for x in r), -bi) for r, bi in zip(W.rows, b)]
    rows += [
        HalfSpace(tuple(Fraction(-1) if j == i else zero for j in range(p)), zero)
        for i in range(p)
    ]
    return witness(HPolyhedron.from_halfspaces(rows, p))


def decide(W: Matrix, b: Sequence) -> FarkasOutcome:
    from .conversion import weyl_v_to_h
    from .geometry import VCone

    b = vec(b)
    if len(b) != W.nrows:
        raise DimensionError(f"right-hand side of length {len(b)} for a matrix with {W.nrows} rows")
    H = weyl_v_to_h(VCone(transpose(W).rows, W.nrows))
    for i, val in enumerate(mat_vec(H.A, b)):
        if val > 0:
            return FarkasOutcome(OutcomeKind.SEPARATOR, v=H.A.rows[i])
    y = _nonnegative_solution(W, b)
    if y is None:
        raise ArithmeticError("cone description and elimination disagree on membership")
    return FarkasOutcome(OutcomeKind.SOLUTION, y=y)


def verify(W: Matrix, b: Sequence, outcome: FarkasOutcome) -> bool:
    """Re-check the certificate in ``outcome`` with exact arithmetic."""
    try:
        b = vec(b)
        if len(b) != W.nrows:
            return False
        if outcome.kind is OutcomeKind.SOLUTION:
            if outcome.y is None or outcome.v is not None:
                return False
            y = vec(outcome.y)
            return all(t >= 0 for t in y) and mat_vec(W, y) == b
        if outcome.kind is OutcomeKind.SEPARATOR:
            if outcome.v is None or outcome.y is not None:
                return False
            v = vec(outcome.v)
            return all(dot(v, col) <= 0 for col in W.columns()) and dot(v, b) > 0
    except (DimensionError, TypeError, ValueError):
        return False
    return False
