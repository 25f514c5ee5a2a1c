"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator. Vectors are plain tuples of fractions; matrices
are immutable row-major tables that remember their column count, so that a
matrix with zero rows still has a well defined width.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

Rational = Fraction
Vector = Tuple[Fraction, ...]
Number = Union[int, Fraction, str]

__all__ = [
    "Rational",
    "Vector",
    "Matrix",
    "DimensionError",
    "to_rational",
    "vec",
    "zeros",
    "identity",
    "dot",
    "add",
    "sub",
    "scale",
    "is_zero",
    "mat_vec",
    "transpose",
    "solve_full_rank",
    "rank",
    "normalize_row",
]


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def to_rational(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; use int, str or Fraction")
    return Fraction(x)


def vec(*entries) -> Vector:
    """Build a vector from numbers, or from a single iterable of numbers."""
    if len(entries) == 1 and not isinstance(entries[0], (int, str, Fraction)):
        entries = tuple(entries[0])
    return tuple(to_rational(x) for x in entries)


def zeros(n: int) -> Vector:
    return (Fraction(0),) * n


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot product of vectors of length {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"cannot add vectors of length {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"cannot subtract vectors of length {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(t: Number, u: Vector) -> Vector:
    t = to_rational(t)
    return tuple(t * a for a in u)


def is_zero(u: Iterable[Fraction]) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix with ``len(rows)`` rows and ``ncols`` columns."""

    rows: Tuple[Vector, ...]
    ncols: int

    def __post_init__(self):
        for i, r in enumerate(self.rows):
            if len(r) != self.ncols:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {self.ncols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Number]], ncols: Optional[int] = None) -> "Matrix":
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("column count is required for a matrix without rows")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[Number]], nrows: int) -> "Matrix":
        cols = [vec(c) for c in columns]
        return transpose(cls(tuple(cols), nrows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.rows), self.ncols)

    @property
    def entries(self) -> Vector:
        return tuple(x for r in self.rows for x in r)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> Tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"


def identity(n: int) -> Matrix:
    return Matrix(
        tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), n
    )


def mat_vec(A: Matrix, x: Sequence[Fraction]) -> Vector:
    if A.ncols != len(x):
        raise DimensionError(f"matrix has {A.ncols} columns but vector has length {len(x)}")
    return tuple(dot(r, x) for r in A.rows)


def transpose(A: Matrix) -> Matrix:
    if not A.rows:
        return Matrix(((),) * A.ncols, 0)
    return Matrix(tuple(zip(*A.rows)), A.nrows)


def _echelon(rows: list, ncols: int):
    """Row-reduce ``rows`` in place; return the pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(vectors: Iterable[Sequence[Fraction]]) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    return len(_echelon(rows, len(rows[0])))


def solve_full_rank(A: Matrix, b: Sequence[Fraction]) -> Optional[Vector]:
    """Solve ``Ax = b`` exactly when ``A`` has full column rank.

    Returns ``None`` when the system is inconsistent or the solution is not
    unique.
    """
    if A.nrows != len(b):
        raise DimensionError(f"matrix has {A.nrows} rows but right-hand side has length {len(b)}")
    if A.nrows < A.ncols:
        raise DimensionError("solve_full_rank needs a square or tall matrix")
    n = A.ncols
    aug = [list(r) + [to_rational(bi)] for r, bi in zip(A.rows, b)]
    pivots = _echelon(aug, n)
    if len(pivots) < n:
        return None
    # rows beyond the pivots must read 0 = 0
    if any(row[n] != 0 for row in aug[n:]):
        return None
    return tuple(aug[i][n] for i in range(n))


def normalize_row(a: Sequence[Fraction], b: Fraction) -> Tuple[Vector, Fraction]:
    """Scale the constraint ``a.x <= b`` so the first nonzero of ``a`` is +-1.

    A zero normal keeps only the sign of ``b``.
    """
    a = tuple(a)
    b = to_rational(b)
    for x in a:
        if x != 0:
            s = abs(x)
            if s == 1:
                return a, b
            return tuple(y / s for y in a), b / s
    return a, Fraction((b > 0) - (b < 0))
