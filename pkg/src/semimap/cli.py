"""Command-line front end.

Exit codes: 0 success, 1 invalid map / non-isomorphic, 2 unknown obstruction
verdict or usage error, 3 enumeration stopped by the node budget, 4 bad input
(unreadable file, malformed map text, malformed type).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import catalog
from .enumerator import (
    DEFAULT_BUDGET,
    DEFAULT_OBSTRUCTION_BUDGET,
    NonZeroCurvatureType,
    NotAPairType,
    SearchStatus,
    Verdict,
    critical_vertex_obstruction,
    enumerate_maps,
)
from .facetypes import SizeTooSmall, TypeSyntaxError, map_type, parse_type
from .isomorphism import automorphism_count, certificate_hash, char_poly, cycle_notation, isomorphism_witness
from .map_core import Map, MapError, MapFormatError, classify_surface, curvature, euler_characteristic, read_map, write_map

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4


class _InputError(Exception):
    pass


class _Out:
    def __init__(self, tsv: bool):
        self.tsv = tsv

    def row(self, *fields: object) -> None:
        sep = "\t" if self.tsv else " "
        print(sep.join(str(f) for f in fields))


def _load(path: str) -> Map:
    try:
        return read_map(path)
    except OSError as e:
        raise _InputError(f"{path}: {e.strerror or e}") from None
    except (MapFormatError, MapError) as e:
        raise _InputError(f"{path}: {type(e).__name__}: {e}") from None


def _type(text: str):
    try:
        return parse_type(text)
    except (TypeSyntaxError, SizeTooSmall, ValueError) as e:
        raise _InputError(f"bad type {text!r}: {e}") from None


def _summary(m: Map) -> list[object]:
    s = classify_surface(m)
    return [certificate_hash(m), f"vertices={m.n_vertices}", str(s), f"aut={automorphism_count(m)}"]


# ---------------------------------------------------------------------------


def cmd_validate(args, out: _Out) -> int:
    try:
        m = read_map(args.path)
    except OSError as e:
        raise _InputError(f"{args.path}: {e.strerror or e}") from None
    except MapFormatError as e:
        raise _InputError(f"{args.path}: {e}") from None
    except MapError as e:
        out.row("invalid", f"{type(e).__name__}: {e}")
        return EXIT_NEGATIVE
    out.row("valid", f"vertices={m.n_vertices}", f"edges={m.n_edges}", f"faces={m.n_faces}")
    return EXIT_OK


def cmd_classify(args, out: _Out) -> int:
    m = _load(args.path)
    curv = {curvature(m.face_sequence(v)) for v in range(m.n_vertices)}
    cv = str(next(iter(curv))) if len(curv) == 1 else "mixed"
    out.row(map_type(m), classify_surface(m), f"chi={euler_characteristic(m)}", f"vertices={m.n_vertices}", f"curvature={cv}")
    return EXIT_OK


def cmd_enumerate(args, out: _Out) -> int:
    t = _type(args.type)
    try:
        report = enumerate_maps(t, args.max_vertices, budget=args.budget, workers=args.workers)
    except (NonZeroCurvatureType, NotAPairType) as e:
        raise _InputError(str(e)) from None
    n = len(report.maps)
    if out.tsv:
        out.row("found", n)
    else:
        print(f"found {n} map" + ("" if n == 1 else "s"))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    for m in report.maps:
        fields = _summary(m)
        out.row(*fields)
        if args.out:
            write_map(m, os.path.join(args.out, f"{fields[0]}.map"), comment=f"{map_type(m)} {classify_surface(m)}")
    if report.status is SearchStatus.BUDGET_EXCEEDED:
        print(f"warning: node budget of {args.budget} exhausted; the list may be incomplete", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_obstruct(args, out: _Out) -> int:
    t = _type(args.type)
    try:
        v = critical_vertex_obstruction(t, args.radius, budget=args.budget)
    except (NonZeroCurvatureType, NotAPairType) as e:
        raise _InputError(str(e)) from None
    out.row(v.value)
    return EXIT_OK if v is Verdict.OBSTRUCTED else EXIT_UNKNOWN


def cmd_iso(args, out: _Out) -> int:
    m1, m2 = _load(args.path1), _load(args.path2)
    w = isomorphism_witness(m1, m2) if m1.n_vertices == m2.n_vertices else None
    if w is None:
        out.row("non-isomorphic")
        return EXIT_NEGATIVE
    out.row("isomorphic")
    if args.witness:
        out.row(cycle_notation(w))
    return EXIT_OK


def cmd_charpoly(args, out: _Out) -> int:
    out.row(char_poly(_load(args.path)))
    return EXIT_OK


def cmd_catalog(args, out: _Out) -> int:
    if args.action == "list":
        for e in catalog.catalog_entries():
            out.row(e.name, e.map_type, classify_surface(e.map), f"vertices={e.n_vertices}")
        return EXIT_OK
    if args.action == "show":
        if not args.arg:
            raise _InputError("catalog show needs an entry name")
        try:
            e = catalog.lookup(args.arg)
        except catalog.UnknownName as err:
            raise _InputError(str(err)) from None
        m = e.map
        out.row("name", e.name)
        out.row("type", e.map_type)
        out.row("surface", classify_surface(m))
        out.row("vertices", m.n_vertices)
        out.row("certificate", certificate_hash(m))
        out.row("charpoly", char_poly(m))
        for v in range(m.n_vertices):
            out.row(f"lk({v})", m.link(v))
        return EXIT_OK
    if not args.arg:
        raise _InputError("catalog export needs a directory")
    paths = catalog.export(args.arg)
    out.row("wrote", len(paths), "files")
    return EXIT_OK


# ---------------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semimap", description="Two-type curvature-0 maps on surfaces.")
    p.add_argument("--tsv", action="store_true", help="tab-separated output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a map file against the map axioms")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("classify", help="type, surface and curvature of a map file")
    s.add_argument("path")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", help="all maps of a two-sequence type up to a vertex bound")
    s.add_argument("--type", required=True)
    s.add_argument("--max-vertices", type=_positive, required=True)
    s.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("--out", help="write each map to DIR/<certificate>.map")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("obstruct", help="local non-existence search around a critical vertex")
    s.add_argument("--type", required=True)
    s.add_argument("--radius", type=_positive, default=2)
    s.add_argument("--budget", type=_positive, default=DEFAULT_OBSTRUCTION_BUDGET)
    s.set_defaults(func=cmd_obstruct)

    s = sub.add_parser("iso", help="decide isomorphism of two map files")
    s.add_argument("path1")
    s.add_argument("path2")
    s.add_argument("--witness", action="store_true", help="print a vertex bijection in cycle notation")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("charpoly", help="characteristic polynomial of the edge graph")
    s.add_argument("path")
    s.set_defaults(func=cmd_charpoly)

    s = sub.add_parser("catalog", help="named census maps")
    s.add_argument("action", choices=["list", "show", "export"])
    s.add_argument("arg", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, _Out(args.tsv))
    except _InputError as e:
        print(f"semimap: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
