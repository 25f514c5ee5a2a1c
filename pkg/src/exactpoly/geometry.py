"""Half-spaces, H-polyhedra, generator representations and membership tests."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .exactlin import DimensionError, Matrix, Vector, dot, mat_vec, to_rational, vec, zeros

__all__ = [
    "Relation",
    "HalfSpace",
    "HPolyhedron",
    "VCone",
    "Polytope",
    "VPolyhedron",
    "h_contains",
    "vcone_contains",
    "polytope_contains",
    "v_contains",
    "halfspace_to_h",
]


class Relation(enum.Enum):
    LE = "<="
    LT = "<"

    def holds(self, lhs: Fraction, rhs: Fraction) -> bool:
        return lhs <= rhs if self is Relation.LE else lhs < rhs


@dataclass(frozen=True)
class HalfSpace:
    """The set ``{x : normal . x <= offset}`` (or ``<`` for a strict row)."""

    normal: Vector
    offset: Fraction
    relation: Relation = Relation.LE

    def __post_init__(self):
        object.__setattr__(self, "normal", vec(self.normal))
        object.__setattr__(self, "offset", to_rational(self.offset))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def contains(self, x: Sequence[Fraction]) -> bool:
        return self.relation.holds(dot(self.normal, x), self.offset)

    def __str__(self) -> str:
        terms = " + ".join(f"{a}*x{j + 1}" for j, a in enumerate(self.normal) if a != 0) or "0"
        return f"{terms} {self.relation.value} {self.offset}"


@dataclass(frozen=True)
class HPolyhedron:
    """``{x in R^n : A x <= b}`` with a relation per row.

    A system with no rows is all of R^n; ``A.ncols`` carries the dimension.
    """

    A: Matrix
    b: Vector
    relations: Tuple[Relation, ...] = None

    def __post_init__(self):
        object.__setattr__(self, "b", vec(self.b))
        if self.relations is None:
            object.__setattr__(self, "relations", (Relation.LE,) * self.A.nrows)
        else:
            object.__setattr__(self, "relations", tuple(self.relations))
        if not (self.A.nrows == len(self.b) == len(self.relations)):
            raise DimensionError(
                f"inconsistent row counts: A has {self.A.nrows}, b has {len(self.b)}, "
                f"relations has {len(self.relations)}"
            )

    @classmethod
    def from_inequalities(cls, A: Iterable[Iterable], b: Iterable, dim: int = None) -> "HPolyhedron":
        return cls(Matrix.from_rows(A, dim), vec(b))

    @classmethod
    def from_halfspaces(cls, rows: Iterable[HalfSpace], dim: int) -> "HPolyhedron":
        rows = list(rows)
        for h in rows:
            if h.dim != dim:
                raise DimensionError(f"half-space of dimension {h.dim} in a system of dimension {dim}")
        return cls(
            Matrix(tuple(h.normal for h in rows), dim),
            tuple(h.offset for h in rows),
            tuple(h.relation for h in rows),
        )

    @classmethod
    def universe(cls, dim: int) -> "HPolyhedron":
        return cls(Matrix((), dim), ())

    @property
    def dim(self) -> int:
        return self.A.ncols

    @property
    def m(self) -> int:
        return self.A.nrows

    def halfspaces(self) -> List[HalfSpace]:
        return [HalfSpace(a, bi, r) for a, bi, r in zip(self.A.rows, self.b, self.relations)]

    def is_strict(self) -> bool:
        return any(r is Relation.LT for r in self.relations)

    def with_rows(self, extra: Iterable[HalfSpace]) -> "HPolyhedron":
        return HPolyhedron.from_halfspaces(self.halfspaces() + list(extra), self.dim)

    def __str__(self) -> str:
        if not self.m:
            return f"R^{self.dim}"
        return "\n".join(str(h) for h in self.halfspaces())


def _check_points(points: Sequence[Vector], dim: int, what: str) -> Tuple[Vector, ...]:
    points = tuple(vec(p) for p in points)
    for p in points:
        if len(p) != dim:
            raise DimensionError(f"{what} of length {len(p)} in dimension {dim}")
    return points


@dataclass(frozen=True)
class VCone:
    """The cone of all nonnegative combinations of ``rays``; no rays means {0}."""

    rays: Tuple[Vector, ...]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "rays", _check_points(self.rays, self.dim, "ray"))

    def matrix(self) -> Matrix:
        """The n x p matrix whose columns are the rays."""
        return Matrix.from_columns(self.rays, self.dim)


@dataclass(frozen=True)
class Polytope:
    """Convex hull of ``vertices``; an empty list denotes {0}."""

    vertices: Tuple[Vector, ...]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", _check_points(self.vertices, self.dim, "vertex"))


@dataclass(frozen=True)
class VPolyhedron:
    """Minkowski sum ``Q + C`` of a polytope and a finitely generated cone.

    ``empty=True`` marks the empty set. It is only produced for infeasible
    inputs, where the conv(empty) = {0} convention must not kick in.
    """

    polytope_part: Polytope
    cone_part: VCone
    empty: bool = False

    def __post_init__(self):
        if self.polytope_part.dim != self.cone_part.dim:
            raise DimensionError("polytope and cone parts live in different dimensions")
        if self.empty and (self.polytope_part.vertices or self.cone_part.rays):
            raise ValueError("an empty V-polyhedron carries no generators")

    @classmethod
    def from_generators(cls, vertices: Iterable, rays: Iterable, dim: int) -> "VPolyhedron":
        return cls(Polytope(tuple(vertices), dim), VCone(tuple(rays), dim))

    @classmethod
    def empty_set(cls, dim: int) -> "VPolyhedron":
        return cls(Polytope((), dim), VCone((), dim), empty=True)

    @property
    def dim(self) -> int:
        return self.cone_part.dim

    @property
    def vertices(self) -> Tuple[Vector, ...]:
        return self.polytope_part.vertices

    @property
    def rays(self) -> Tuple[Vector, ...]:
        return self.cone_part.rays


def h_contains(P: HPolyhedron, x: Sequence) -> bool:
    x = vec(x)
    if len(x) != P.dim:
        raise DimensionError(f"point of length {len(x)} tested against a system in R^{P.dim}")
    return all(
        r.holds(v, bi) for v, bi, r in zip(mat_vec(P.A, x), P.b, P.relations)
    )


def vcone_contains(C: VCone, x: Sequence) -> bool:
    """True iff ``x`` is a nonnegative combination of the rays of ``C``."""
    from .farkas import decide

    x = vec(x)
    if len(x) != C.dim:
        raise DimensionError(f"point of length {len(x)} tested against a cone in R^{C.dim}")
    return decide(C.matrix(), x).is_solution


def polytope_contains(Q: Polytope, x: Sequence) -> bool:
    """True iff ``x`` is a convex combination of the vertices of ``Q``."""
    from .farkas import decide

    x = vec(x)
    if len(x) != Q.dim:
        raise DimensionError(f"point of length {len(x)} tested against a polytope in R^{Q.dim}")
    vertices = Q.vertices or (zeros(Q.dim),)
    lifted = Matrix.from_columns((v + (Fraction(1),) for v in vertices), Q.dim + 1)
    return decide(lifted, x + (Fraction(1),)).is_solution


def v_contains(V: VPolyhedron, x: Sequence) -> bool:
    """Membership in ``Q + C``: ``(x, 1)`` lies in the cone of ``(v, 1)`` and ``(r, 0)``."""
    from .farkas import decide

    x = vec(x)
    if len(x) != V.dim:
        raise DimensionError(f"point of length {len(x)} tested against a set in R^{V.dim}")
    if V.empty:
        return False
    one, zero = Fraction(1), Fraction(0)
    vertices = V.vertices or (zeros(V.dim),)
    cols = [v + (one,) for v in vertices] + [r + (zero,) for r in V.rays]
    return decide(Matrix.from_columns(cols, V.dim + 1), x + (one,)).is_solution


def halfspace_to_h(h: HalfSpace) -> HPolyhedron:
    return HPolyhedron.from_halfspaces([h], h.dim)
