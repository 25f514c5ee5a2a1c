"""Fourier-Motzkin elimination with exact arithmetic and provenance tracking.

Every row produced here remembers how it was obtained as a nonnegative
combination of the rows it came from, so infeasibility claims and projected
constraints can be audited after the fact. Back-substitution through an
:class:`EliminationTrace` turns a point of a projection into a point of the
original polyhedron.
"""

from __future__ import annotations

import enum
from functools import cached_property
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import kernel as _kernel
from .exactlin import DimensionError, Matrix, Vector, dot, vec
from .geometry import HalfSpace, HPolyhedron, Relation

__all__ = [
    "EliminationStep",
    "EliminationTrace",
    "ExtremumStatus",
    "Sense",
    "ExtremumResult",
    "eliminate_one",
    "project",
    "reduce",
    "feasible",
    "witness",
    "back_substitute",
    "lift_scaled",
    "extremum",
    "implies",
]

Combination = Tuple[Tuple[int, Fraction], ...]


def _unpack(P: HPolyhedron):
    rows = [a + (bi,) for a, bi in zip(P.A.rows, P.b)]
    strict = [r is Relation.LT for r in P.relations]
    return rows, strict


def _pack(rows, strict, dim: int) -> HPolyhedron:
    return HPolyhedron(
        Matrix(tuple(r[:-1] for r in rows), dim),
        tuple(r[-1] for r in rows),
        tuple(Relation.LT if s else Relation.LE for s in strict),
    )


@dataclass(frozen=True)
class EliminationStep:
    """One application of the elimination to the variable at ``eliminated_index``.

    ``positive``, ``negative`` and ``zero`` partition the rows of ``source`` by
    the sign of their coefficient on the eliminated variable. ``derived`` is
    the unreduced output; ``combinations[i]`` lists ``(source_row, multiplier)``
    pairs whose weighted sum is derived row ``i``. ``result`` is ``derived``
    after :func:`reduce` (identical when the step was not reduced) and
    ``kept[i] = (derived_row, factor)`` says result row ``i`` is ``factor``
    times that derived row.
    """

    eliminated_index: int
    source: HPolyhedron
    positive: Tuple[int, ...]
    negative: Tuple[int, ...]
    zero: Tuple[int, ...]
    derived: HPolyhedron
    combinations: Tuple[Combination, ...]
    result: HPolyhedron
    kept: Tuple[Tuple[int, Fraction], ...]

    @property
    def derived_rows(self) -> List[Tuple[HalfSpace, Vector]]:
        """Derived rows with dense multiplier vectors over the source rows."""
        m = self.source.m
        out = []
        for h, combo in zip(self.derived.halfspaces(), self.combinations):
            mult = [Fraction(0)] * m
            for i, c in combo:
                mult[i] += c
            out.append((h, tuple(mult)))
        return out


@dataclass(frozen=True)
class EliminationTrace:
    """A sequence of elimination steps from ``original`` down to ``final``.

    ``certificates[i]`` expresses final row ``i`` as a nonnegative combination
    of original rows, as ``(original_row, multiplier)`` pairs.
    """

    original: HPolyhedron
    steps: Tuple[EliminationStep, ...]
    final: HPolyhedron
    certificates: Tuple[Combination, ...]

    @cached_property
    def lift_plan(self):
        """Integer source rows per step, in back-substitution order."""
        plan = []
        for step in reversed(self.steps):
            rows, strict = _unpack(step.source)
            plan.append((step.eliminated_index, _kernel.prepare_rows(rows), strict))
        return plan


def eliminate_one(P: HPolyhedron, k: int) -> Tuple[HPolyhedron, EliminationStep]:
    """Eliminate variable ``k`` without any reduction.

    The output has exactly ``|S1| * |S-1| + |S0|`` rows: one per pair of a
    positive-coefficient row with a negative one, then the zero-coefficient
    rows with column ``k`` dropped.
    """
    if not 0 <= k < P.dim:
        raise IndexError(f"variable index {k} out of range for a system in R^{P.dim}")
    rows, strict = _unpack(P)
    pos, neg, zero, new_rows, new_strict, combos = _kernel.fm_step(rows, strict, k)
    Q = _pack(new_rows, new_strict, P.dim - 1)
    step = EliminationStep(
        k, P, tuple(pos), tuple(neg), tuple(zero), Q, tuple(combos), Q,
        tuple((i, Fraction(1)) for i in range(len(new_rows))),
    )
    return Q, step


def reduce(P: HPolyhedron) -> HPolyhedron:
    """Normalize rows, drop duplicates and trivially true rows.

    The solution set is unchanged. Among rows with the same normalized normal
    the tightest offset is kept (strict wins a tie) at the position of the
    first occurrence.
    """
    rows, strict = _unpack(P)
    out_rows, out_strict, _ = _kernel.reduce_rows(rows, strict)
    return _pack(out_rows, out_strict, P.dim)


def _eliminate_prefix(P: HPolyhedron, count: int, stop_on_infeasible: bool = False,
                      prune: bool = True) -> EliminationTrace:
    """Eliminate the first ``count`` variables, reducing after every step.

    With ``prune`` a row whose certificate uses more than ``e + 1`` original
    rows after ``e`` eliminations is dropped; such a row is a nonnegative
    combination of rows with smaller support, so the solution set is kept.
    For the same reason a duplicate is only dropped in favour of a row whose
    support is no larger, except after the last step.
    """
    rows, strict = _unpack(P)
    certs: List[Combination] = [((i, Fraction(1)),) for i in range(len(rows))]
    # multipliers are positive, so a support is the union of the parents' supports
    supports = [frozenset((i,)) for i in range(len(rows))]
    steps = []
    dim = P.dim
    source = P
    for done in range(1, count + 1):
        pos, neg, zero, new_rows, new_strict, combos = _kernel.fm_step(rows, strict, 0)
        new_supports = [
            supports[c[0][0]] | supports[c[1][0]] if len(c) == 2 else supports[c[0][0]]
            for c in combos
        ]
        if prune:
            candidates = [i for i, sup in enumerate(new_supports) if len(sup) <= done + 1]
            # supports only steer later pruning, so the last step dedupes plainly
            rows, strict, kept = _kernel.reduce_rows(
                [new_rows[i] for i in candidates],
                [new_strict[i] for i in candidates],
                [new_supports[i] for i in candidates] if done < count else None,
            )
            kept = [(candidates[i], f) for i, f in kept]
        else:
            rows, strict, kept = _kernel.reduce_rows(new_rows, new_strict)
        certs = _kernel.compose_certs([(combos[i], f) for i, f in kept], certs)
        supports = [new_supports[i] for i, _ in kept]
        dim -= 1
        result = _pack(rows, strict, dim)
        steps.append(
            EliminationStep(0, source, tuple(pos), tuple(neg), tuple(zero),
                            _pack(new_rows, new_strict, dim), tuple(combos), result, tuple(kept))
        )
        source = result
        if stop_on_infeasible and _has_contradiction(rows, strict):
            break
    return EliminationTrace(P, tuple(steps), source, tuple(certs))


def _has_contradiction(rows, strict) -> bool:
    for r, s in zip(rows, strict):
        if all(x == 0 for x in r[:-1]):
            b = r[-1]
            if b < 0 or (s and b == 0):
                return True
    return False


def project(P: HPolyhedron, keep_last: int) -> Tuple[HPolyhedron, EliminationTrace]:
    """Project onto the last ``keep_last`` coordinates.

    Variables are eliminated one at a time, lowest index first, with
    :func:`reduce` and support pruning applied after each step.
    """
    if not 0 <= keep_last <= P.dim:
        raise ValueError(f"keep_last={keep_last} out of range for a system in R^{P.dim}")
    trace = _eliminate_prefix(P, P.dim - keep_last)
    return trace.final, trace


def back_substitute(trace: EliminationTrace, point: Sequence) -> Vector:
    """Lift a point of ``trace.final`` to a point of ``trace.original``.

    Each eliminated variable takes the largest lower bound when one exists,
    otherwise the smallest upper bound, otherwise 0. Strict bounds move the
    choice strictly inside the interval.
    """
    x = vec(point)
    if len(x) != trace.final.dim:
        raise DimensionError(f"point of length {len(x)} for a projection in R^{trace.final.dim}")
    den = 1
    for xi in x:
        d = xi.denominator
        den = den * d // gcd(den, d)
    (X, D), = _kernel.lift_many(trace.lift_plan, [([int(xi * den) for xi in x], den)])
    return tuple(Fraction(xi, D) for xi in X)


def lift_scaled(trace: EliminationTrace, points) -> List[Tuple[List[int], int]]:
    """Batch :func:`back_substitute` on integer data.

    ``points`` holds ``(X, D)`` pairs standing for ``X / D`` with ``D > 0``;
    the result uses the same encoding. No Fractions are built, which makes
    this the fast path for lifting many points.
    """
    n = trace.final.dim
    pts = []
    for X, D in points:
        X = [int(v) for v in X]
        if len(X) != n:
            raise DimensionError(f"point of length {len(X)} for a projection in R^{n}")
        if D <= 0:
            raise ValueError("denominators must be positive")
        pts.append((X, int(D)))
    return _kernel.lift_many(trace.lift_plan, pts)


def feasible(P: HPolyhedron) -> bool:
    trace = _eliminate_prefix(P, P.dim, stop_on_infeasible=True)
    rows, strict = _unpack(trace.final)
    return not _has_contradiction(rows, strict)


def witness(P: HPolyhedron) -> Optional[Vector]:
    """A point of ``P`` found by full elimination and back-substitution, or None."""
    trace = _eliminate_prefix(P, P.dim, stop_on_infeasible=True)
    rows, strict = _unpack(trace.final)
    if _has_contradiction(rows, strict):
        return None
    return back_substitute(trace, ())


class ExtremumStatus(enum.Enum):
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    FINITE = "finite"


class Sense(enum.Enum):
    MAX = "max"
    MIN = "min"


@dataclass(frozen=True)
class ExtremumResult:
    status: ExtremumStatus
    value: Optional[Fraction] = None
    witness: Optional[Vector] = None


def extremum(P: HPolyhedron, c: Sequence, sense: Sense = Sense.MAX) -> ExtremumResult:
    """Optimize ``c . x`` over ``P`` by eliminating every variable but ``t = c . x``."""
    c = vec(c)
    if len(c) != P.dim:
        raise DimensionError(f"objective of length {len(c)} for a system in R^{P.dim}")
    if isinstance(sense, str):
        sense = Sense(sense.lower())
    n = P.dim
    one, zero = Fraction(1), Fraction(0)
    rows = [HalfSpace(a + (zero,), bi, r) for a, bi, r in zip(P.A.rows, P.b, P.relations)]
    rows.append(HalfSpace(tuple(-ci for ci in c) + (one,), zero))
    rows.append(HalfSpace(c + (-one,), zero))
    lifted = HPolyhedron.from_halfspaces(rows, n + 1)
    trace = _eliminate_prefix(lifted, n, stop_on_infeasible=True)
    final_rows, final_strict = _unpack(trace.final)
    if _has_contradiction(final_rows, final_strict):
        return ExtremumResult(ExtremumStatus.INFEASIBLE)
    upper = [r[1] / r[0] for r in final_rows if r[0] > 0]
    lower = [r[1] / r[0] for r in final_rows if r[0] < 0]
    if sense is Sense.MAX:
        if not upper:
            return ExtremumResult(ExtremumStatus.UNBOUNDED)
        value = min(upper)
    else:
        if not lower:
            return ExtremumResult(ExtremumStatus.UNBOUNDED)
        value = max(lower)
    point = back_substitute(trace, (value,))[:n]
    return ExtremumResult(ExtremumStatus.FINITE, value, point)


def implies(P: HPolyhedron, h: HalfSpace) -> bool:
    """True iff every point of ``P`` satisfies ``h``.

    Decided by checking that ``P`` together with the strict negation of
    ``h`` has no solution.
    """
    if h.dim != P.dim:
        raise DimensionError(f"half-space in R^{h.dim} tested against a system in R^{P.dim}")
    if h.relation is not Relation.LE:
        raise ValueError("implies expects a non-strict half-space")
    negated = HalfSpace(tuple(-a for a in h.normal), -h.offset, Relation.LT)
    return not feasible(P.with_rows([negated]))
