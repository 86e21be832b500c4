"""Command-line interface: ``trisurf <command> [options]``.

Exit status is 0 on success, 1 when a check or validation fails, and 2 on
usage or parse errors.  A file argument of ``-`` reads standard input.
"""

from __future__ import annotations

import argparse
import sys

from .audit import audit
from .complex import canonical_form, classify_edges, validate
from .contraction import contractible_edges, reduce_to_irreducible
from .enumeration import SURFACES, EnumSpec, enumerate_triangulations
from .errors import InvalidTriangulationError, NotIrreducibleError, ParseError, TriangulationError
from .generators import SURFACE_NAMES, canonical_surface, figure1, refine
from .persistence import parse_tri, read_tri, write_catalog, write_report, write_tri
from .topology import classify_surface


class _UsageError(Exception):
    pass


def _load(path: str, *, validated: bool = True):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise _UsageError(f"cannot read {path}: {exc.strerror}") from None
    return read_tri(data) if validated else parse_tri(data)


def _emit(out, data: bytes | str):
    if isinstance(data, bytes):
        data = data.decode("ascii")
    out.write(data)


def cmd_validate(args, out, err):
    t = _load(args.file, validated=False)
    report = validate(t)
    if report.valid:
        out.write("valid\n")
        return 0
    for v in report.violations:
        out.write(f"{v.axiom}: {v.witness}\n")
    return 1


def cmd_classify(args, out, err):
    out.write(f"{classify_surface(_load(args.file))}\n")
    return 0


def cmd_edges(args, out, err):
    for rec in classify_edges(_load(args.file)):
        u, v = rec.endpoints
        out.write(f"{u} {v} {rec.kind}{' linking' if rec.linking else ''}\n")
    return 0


def cmd_contractible(args, out, err):
    for u, v in contractible_edges(_load(args.file), exhaustive=args.exhaustive):
        out.write(f"{u} {v}\n")
    return 0


def cmd_reduce(args, out, err):
    t = _load(args.file)
    err.write(f"seed={args.seed}\n")
    reduced, trace = reduce_to_irreducible(t, policy=args.policy, seed=args.seed)
    _emit(out, write_tri(reduced))
    err.write(f"{trace.summary()}: {t.vertex_count} -> {reduced.vertex_count} vertices\n")
    return 0


def cmd_generate(args, out, err):
    err.write(f"seed={args.seed}\n")
    if args.kind == "figure1":
        if args.g is None or args.b is None:
            raise _UsageError("figure1 needs --g and --b")
        t = figure1(args.g, args.b, diagonal_seed=args.seed)
    else:
        if not args.name:
            raise _UsageError(f"surface needs a name, one of {', '.join(SURFACE_NAMES)}")
        t = canonical_surface(args.name)
    if args.refine:
        t = refine(t, args.refine, seed=args.seed)
    _emit(out, write_tri(t))
    return 0


def cmd_enumerate(args, out, err):
    spec = EnumSpec(SURFACES[args.surface], args.max_vertices, args.irreducible, args.budget)
    catalog = enumerate_triangulations(spec, jobs=args.jobs)
    _emit(out, write_catalog(catalog))
    err.write(f"{len(catalog)} classes, complete={str(catalog.complete).lower()}\n")
    return 0 if catalog.complete else 1


def cmd_audit(args, out, err):
    report = audit(_load(args.file), homotopy_classes=not args.no_homotopy)
    _emit(out, write_report(report))
    return 0 if report.passed else 1


def cmd_canon(args, out, err):
    _emit(out, canonical_form(_load(args.file)) + b"\n")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trisurf", description="Triangulated surfaces and irreducibility.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="triangulation file, or - for stdin")
        p.set_defaults(func=func)
        return p

    with_file("validate", cmd_validate, "check the triangulation axioms")
    with_file("classify", cmd_classify, "print orientability, Euler genus, boundaries, chi")
    with_file("edges", cmd_edges, "list edges with their kind")
    p = with_file("contractible", cmd_contractible, "list contractible edges")
    p.add_argument("--exhaustive", action="store_true", help="run the oracle on every edge")
    p = with_file("reduce", cmd_reduce, "contract edges until irreducible")
    p.add_argument("--policy", choices=("first", "random"), default="first")
    p.add_argument("--seed", type=int, default=0)
    p = with_file("audit", cmd_audit, "audit an irreducible triangulation (JSON)")
    p.add_argument("--no-homotopy", action="store_true", help="skip the 3-cycle class check")
    with_file("canon", cmd_canon, "print the canonical form")

    p = sub.add_parser("generate", help="print a generated triangulation")
    p.add_argument("kind", choices=("figure1", "surface"))
    p.add_argument("name", nargs="?", help=f"for 'surface': {', '.join(SURFACE_NAMES)}")
    p.add_argument("--g", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--refine", type=int, default=0, metavar="N",
                   help="add N vertices by random subdivision")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", help="print a catalog of canonical forms")
    p.add_argument("--surface", choices=sorted(SURFACES), required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--irreducible", action="store_true")
    p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except _UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except (InvalidTriangulationError, NotIrreducibleError) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    except (TriangulationError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())
