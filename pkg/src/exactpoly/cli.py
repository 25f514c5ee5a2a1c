"""Command line front end.

Exit status is 0 on success, 1 when a predicate command (``feasible``,
``contains``, ``equal``) answers no, and 2 on usage, parse or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import conversion, farkas, fourier_motzkin as fm
from .exactlin import DimensionError
from .formats import (
    Document,
    DocumentKind,
    ParseError,
    emit,
    format_number,
    format_vector,
    parse,
    parse_matrix,
    parse_vector,
)
from .geometry import HPolyhedron, h_contains, v_contains

__all__ = ["main", "run"]


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> Document:
    try:
        return parse(_read(path))
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _as_h(doc: Document) -> HPolyhedron:
    if doc.kind is DocumentKind.H_REP:
        return doc.payload
    return conversion.compose(doc.payload)


def _require(doc: Document, kind: DocumentKind, path: str) -> None:
    if doc.kind is not kind:
        raise UsageError(f"{path}: expected an {kind.value} file")


def _point(text: str, dim: int):
    try:
        p = parse_vector(f"{dim}\n{text}")
    except ParseError as exc:
        raise UsageError(f"bad point {text!r}: {exc}") from None
    return p


def _cmd_project(args):
    doc = _load(args.file)
    _require(doc, DocumentKind.H_REP, args.file)
    P = doc.payload
    if not 0 <= args.keep <= P.dim:
        raise UsageError(f"--keep must be between 0 and {P.dim}")
    Q, _ = fm.project(P, args.keep)
    return emit(Document.of(Q)), 0


def _cmd_feasible(args):
    doc = _load(args.file)
    P = _as_h(doc)
    x = fm.witness(P)
    if x is None:
        return "INFEASIBLE\n", 1
    return f"FEASIBLE\n{format_vector(x)}\n", 0


def _cmd_extremum(args):
    doc = _load(args.file)
    P = _as_h(doc)
    c = _point(args.objective, P.dim)
    res = fm.extremum(P, c, fm.Sense(args.sense))
    if res.status is fm.ExtremumStatus.FINITE:
        return f"FINITE {format_number(res.value)}\n{format_vector(res.witness)}\n", 0
    return f"{res.status.name}\n", 0


def _cmd_farkas(args):
    try:
        W = parse_matrix(_read(args.matrix))
        b = parse_vector(_read(args.vector))
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    if len(b) != W.nrows:
        raise UsageError(f"vector has length {len(b)} but the matrix has {W.nrows} rows")
    out = farkas.decide(W, b)
    if out.is_solution:
        return f"SOLUTION\n{format_vector(out.y)}\n", 0
    return f"SEPARATOR\n{format_vector(out.v)}\n", 0


def _cmd_decompose(args):
    doc = _load(args.file)
    _require(doc, DocumentKind.H_REP, args.file)
    return emit(Document.of(conversion.decompose(doc.payload))), 0


def _cmd_compose(args):
    doc = _load(args.file)
    _require(doc, DocumentKind.V_REP, args.file)
    return emit(Document.of(conversion.compose(doc.payload))), 0


def _cmd_convert(args):
    doc = _load(args.file)
    if doc.kind is DocumentKind.H_REP:
        return emit(Document.of(conversion.decompose(doc.payload))), 0
    return emit(Document.of(conversion.compose(doc.payload))), 0


def _cmd_contains(args):
    doc = _load(args.file)
    x = _point(args.point, doc.ambient_dim)
    if doc.kind is DocumentKind.H_REP:
        inside = h_contains(doc.payload, x)
    else:
        inside = v_contains(doc.payload, x)
    return ("INSIDE\n", 0) if inside else ("OUTSIDE\n", 1)


def _cmd_equal(args):
    a, b = _load(args.first), _load(args.second)
    if a.ambient_dim != b.ambient_dim:
        raise UsageError("the two files live in different dimensions")
    same = conversion.h_equal(_as_h(a), _as_h(b))
    return ("EQUAL\n", 0) if same else ("DIFFERENT\n", 1)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="exactpoly", description="Exact polyhedral computations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--out", help="write the result to this file instead of stdout")
        return sp

    sp = add("project", _cmd_project, "project an H-file onto its last coordinates")
    sp.add_argument("file")
    sp.add_argument("--keep", type=int, required=True)

    sp = add("feasible", _cmd_feasible, "decide feasibility and print a witness")
    sp.add_argument("file")

    sp = add("extremum", _cmd_extremum, "optimize a linear objective")
    sp.add_argument("file")
    sp.add_argument("--objective", required=True)
    sp.add_argument("--sense", choices=["max", "min"], default="max")

    sp = add("farkas", _cmd_farkas, "decide the Farkas alternative for W y = b, y >= 0")
    sp.add_argument("matrix")
    sp.add_argument("vector")

    for name, func, help_ in (
        ("decompose", _cmd_decompose, "H-file to V-file"),
        ("compose", _cmd_compose, "V-file to H-file"),
        ("convert", _cmd_convert, "convert to the other representation"),
    ):
        add(name, func, help_).add_argument("file")

    sp = add("contains", _cmd_contains, "test whether a point lies in the set")
    sp.add_argument("file")
    sp.add_argument("point", help='coordinates, e.g. "1 1/2"')

    sp = add("equal", _cmd_equal, "test two files for set equality")
    sp.add_argument("first")
    sp.add_argument("second")
    return p


def run(argv: List[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        text, status = args.func(args)
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            except OSError as exc:
                raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
        else:
            stdout.write(text)
        return status
    except (UsageError, DimensionError) as exc:
        stderr.write(f"exactpoly: error: {exc}\n")
        return 2


def main(argv: Optional[List[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
