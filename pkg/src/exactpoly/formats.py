"""Text formats for H- and V-representations, matrices and vectors.

H-file::

    * optional comment lines
    H-representation
    begin
    m n+1 rational
    b  -a_1 ... -a_n        (one row per inequality a . x <= b)
    end

V-file: same frame with ``V-representation`` and rows ``flag x_1 ... x_n``,
flag 1 for a vertex and 0 for a ray. A V-file with no rows is the empty set;
a V-file with rays but no vertex gets the origin as its vertex.

Matrix files hold a ``rows cols`` header followed by the entries; vector
files hold a length followed by the entries. Numbers are integers or
``p/q`` rationals throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple, Union

from .exactlin import Matrix, Vector, zeros
from .geometry import HPolyhedron, Relation, VPolyhedron

__all__ = [
    "ParseError",
    "DocumentKind",
    "Document",
    "parse",
    "emit",
    "parse_matrix",
    "parse_vector",
    "format_number",
    "format_vector",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DocumentKind(enum.Enum):
    H_REP = "H-representation"
    V_REP = "V-representation"


@dataclass(frozen=True)
class Document:
    kind: DocumentKind
    ambient_dim: int
    payload: Union[HPolyhedron, VPolyhedron]
    comments: Tuple[str, ...] = field(default=())

    @classmethod
    def of(cls, payload, comments=()) -> "Document":
        if isinstance(payload, HPolyhedron):
            return cls(DocumentKind.H_REP, payload.dim, payload, tuple(comments))
        return cls(DocumentKind.V_REP, payload.dim, payload, tuple(comments))


def _number(tok: str, lineno: int) -> Fraction:
    num, _, den = tok.partition("/")
    try:
        if den:
            if int(den) == 0:
                raise ParseError(f"zero denominator in {tok!r}", lineno)
            if int(den) < 0:
                raise ValueError
        return Fraction(int(num), int(den) if den else 1)
    except ValueError:
        raise ParseError(f"not a rational number: {tok!r}", lineno) from None


def format_number(x: Fraction) -> str:
    return str(Fraction(x))


def format_vector(v) -> str:
    return " ".join(format_number(x) for x in v)


def _lines(text: str):
    for i, line in enumerate(text.splitlines(), start=1):
        yield i, line.strip()


def parse(text: str) -> Document:
    comments: List[str] = []
    lines = [(i, s) for i, s in _lines(text)]
    pos = 0

    def next_line(what: str):
        nonlocal pos
        while pos < len(lines) and not lines[pos][1]:
            pos += 1
        if pos == len(lines):
            raise ParseError(f"unexpected end of input, expected {what}", lines[-1][0] if lines else 1)
        item = lines[pos]
        pos += 1
        return item

    while True:
        lineno, line = next_line("a representation header")
        if line.startswith("*"):
            comments.append(line)
            continue
        break
    try:
        kind = DocumentKind(line)
    except ValueError:
        raise ParseError(f"expected 'H-representation' or 'V-representation', got {line!r}", lineno) from None

    lineno, line = next_line("'begin'")
    if line.split()[0] in ("strict", "linearity"):
        raise ParseError("strict and linearity rows are not supported", lineno)
    if line != "begin":
        raise ParseError(f"expected 'begin', got {line!r}", lineno)

    lineno, line = next_line("a size line")
    parts = line.split()
    if len(parts) != 3:
        raise ParseError(f"expected 'rows columns rational', got {line!r}", lineno)
    try:
        nrows, ncols = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"bad size line {line!r}", lineno) from None
    if parts[2] == "real":
        raise ParseError("number type 'real' is not supported; use 'rational'", lineno)
    if parts[2] not in ("rational", "integer"):
        raise ParseError(f"unknown number type {parts[2]!r}", lineno)
    if nrows < 0 or ncols < 1:
        raise ParseError(f"bad size {nrows} x {ncols}", lineno)
    n = ncols - 1

    data = []
    for _ in range(nrows):
        lineno, line = next_line("a data row")
        toks = line.split()
        if toks and toks[0] == "end":
            raise ParseError(f"expected {nrows} rows, found {len(data)}", lineno)
        if len(toks) != ncols:
            raise ParseError(f"row has {len(toks)} entries, expected {ncols}", lineno)
        data.append((lineno, [_number(t, lineno) for t in toks]))

    lineno, line = next_line("'end'")
    if line != "end":
        raise ParseError(f"expected 'end', got {line!r}", lineno)
    while pos < len(lines):
        lineno, line = lines[pos]
        pos += 1
        if line and not line.startswith("*"):
            raise ParseError(f"unexpected content after 'end': {line!r}", lineno)

    if kind is DocumentKind.H_REP:
        A = tuple(tuple(-x for x in row[1:]) for _, row in data)
        b = tuple(row[0] for _, row in data)
        payload = HPolyhedron(Matrix(A, n), b)
    else:
        vertices, rays = [], []
        for ln, row in data:
            if row[0] == 1:
                vertices.append(tuple(row[1:]))
            elif row[0] == 0:
                rays.append(tuple(row[1:]))
            else:
                raise ParseError(f"generator flag must be 0 or 1, got {row[0]}", ln)
        if not data:
            payload = VPolyhedron.empty_set(n)
        else:
            payload = VPolyhedron.from_generators(vertices or [zeros(n)], rays, n)
    return Document(kind, n, payload, tuple(comments))


def emit(doc: Document) -> str:
    out = list(doc.comments)
    out.append(doc.kind.value)
    out.append("begin")
    n = doc.ambient_dim
    P = doc.payload
    rows = []
    if doc.kind is DocumentKind.H_REP:
        if any(r is Relation.LT for r in P.relations):
            raise ValueError("strict rows cannot be written to an H-file")
        for a, bi in zip(P.A.rows, P.b):
            rows.append((bi,) + tuple(-x for x in a))
    elif not P.empty:
        vertices = P.vertices or (zeros(n),)
        rows += [(Fraction(1),) + v for v in vertices]
        rows += [(Fraction(0),) + r for r in P.rays]
    out.append(f"{len(rows)} {n + 1} rational")
    out += [format_vector(r) for r in rows]
    out.append("end")
    return "\n".join(out) + "\n"


def _numbers(text: str):
    toks = []
    for lineno, line in _lines(text):
        if not line or line.startswith("*"):
            continue
        toks += [(lineno, t) for t in line.split()]
    return toks


def parse_matrix(text: str) -> Matrix:
    toks = _numbers(text)
    if len(toks) < 2:
        raise ParseError("matrix file needs a 'rows cols' header", toks[0][0] if toks else 1)
    try:
        m, n = int(toks[0][1]), int(toks[1][1])
    except ValueError:
        raise ParseError("bad matrix header", toks[0][0]) from None
    body = toks[2:]
    if len(body) != m * n:
        raise ParseError(f"expected {m * n} matrix entries, found {len(body)}",
                         body[-1][0] if body else toks[1][0])
    vals = [_number(t, ln) for ln, t in body]
    return Matrix(tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(m)), n)


def parse_vector(text: str) -> Vector:
    toks = _numbers(text)
    if not toks:
        raise ParseError("vector file needs a length", 1)
    try:
        n = int(toks[0][1])
    except ValueError:
        raise ParseError("bad vector length", toks[0][0]) from None
    body = toks[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} vector entries, found {len(body)}",
                         body[-1][0] if body else toks[0][0])
    return tuple(_number(t, ln) for ln, t in body)
