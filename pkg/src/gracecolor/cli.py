"""Command-line front end.

Subcommands:
  verify <graph> <coloring>   check a graceful coloring
  solve <graph>               exact graceful chromatic number
  chromatic <graph>           exact chromatic number
  characterize <graph>        both numbers plus the equality predicates
  complete <n>                graceful chromatic number of the complete graph
  ap3 longest <m>             largest 3-AP-free subset of [1..m]
  ap3 minspan <k>             minimal span of a k-element 3-AP-free set
  ap3 check <list>            test a comma-separated set for progressions
  table <n_max>               reproduce the complete-graph reference table
  gen <family> <params...>    emit a named graph as an edge-list document

Exit codes: 0 success/valid; 1 invalid coloring, failed check, or reference
mismatch; 2 usage error; 3 budget exhausted; 4 I/O or parse error.
Results go to stdout, diagnostics to stderr.  Identical invocations with the
same cache state produce byte-identical output (timings are never printed).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence, TextIO

from . import ap3, solver, tables
from .budget import BudgetExhausted, SolveBudget
from .checking import ColoringFormatError, GracefulColoring, parse_coloring, verify_graceful
from .complete import chi_g_complete
from .graphs import FAMILY_TAGS, GraphFamily, GraphFormatError, parse_graph, serialize_graph

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4

DEFAULT_MAX_NODES = 10 ** 8
DEFAULT_MAX_SECONDS = 60.0
CACHE_ENV_VAR = "GRACECOLOR_CACHE"


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES,
                        metavar="N", help="search node limit (default %(default)s)")
    common.add_argument("--max-seconds", type=float, default=DEFAULT_MAX_SECONDS,
                        metavar="S", help="wall-clock limit (default %(default)s)")
    common.add_argument("--workers", type=int, default=1, metavar="W",
                        help="parallel root branches for graceful decisions")
    common.add_argument("--cache", metavar="PATH",
                        default=os.environ.get(CACHE_ENV_VAR),
                        help=f"proven-value cache file (default ${CACHE_ENV_VAR})")
    common.add_argument("--records", action="store_true",
                        help="line-oriented machine-readable output")

    parser = argparse.ArgumentParser(prog="gracecolor", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a graceful coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--palette", type=int, default=None,
                   help="palette size l (default: largest color used)")

    for name in ("solve", "chromatic", "characterize"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("graph")

    p = sub.add_parser("complete", parents=[common])
    p.add_argument("n", type=int)

    p = sub.add_parser("ap3")
    ap3_sub = p.add_subparsers(dest="ap3_command", required=True)
    q = ap3_sub.add_parser("longest", parents=[common])
    q.add_argument("m", type=int)
    q = ap3_sub.add_parser("minspan", parents=[common])
    q.add_argument("k", type=int)
    q = ap3_sub.add_parser("check", parents=[common])
    q.add_argument("elements", help="comma-separated integers")

    p = sub.add_parser("table", parents=[common])
    p.add_argument("n_max", type=int)

    p = sub.add_parser("gen", parents=[common])
    p.add_argument("family", choices=FAMILY_TAGS)
    p.add_argument("params", nargs="+", type=int)

    return parser


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _budget(args: argparse.Namespace) -> SolveBudget:
    return SolveBudget(args.max_nodes, args.max_seconds)


def _csv(values: Sequence[int]) -> str:
    return ",".join(map(str, values))


def _load_cache_engine(args: argparse.Namespace) -> tuple[ap3.Ap3Engine, tables.ValueCache | None]:
    engine = ap3.Ap3Engine()
    cache = None
    if args.cache:
        if os.path.exists(args.cache):
            cache = tables.load_cache(args.cache)
            cache.seed_engine(engine)
        else:
            cache = tables.ValueCache()
    return engine, cache


def _store_cache(args: argparse.Namespace, engine: ap3.Ap3Engine,
                 cache: tables.ValueCache | None) -> None:
    if cache is not None:
        cache.absorb_engine(engine)
        tables.store_cache(cache, args.cache)


def run(argv: Sequence[str], stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    """Execute one CLI invocation; returns the exit code."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        return _dispatch(args, out, err)
    except (GraphFormatError, ColoringFormatError, tables.CacheFormatError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_IO
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=err)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def _dispatch(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.command == "verify":
        g = parse_graph(_read(args.graph))
        coloring = parse_coloring(_read(args.coloring), args.palette)
        report = verify_graceful(g, coloring)
        if report.valid:
            print("valid" if not args.records else f"valid {coloring.palette}", file=out)
            return EXIT_OK
        if args.records:
            kind = report.violation.kind
            print(f"invalid {kind} {_csv(report.violation.vertices)}", file=out)
        else:
            print(f"invalid: {report.violation}", file=out)
        return EXIT_INVALID

    if args.command == "solve":
        g = parse_graph(_read(args.graph))
        report = solver.chi_g(g, _budget(args), args.workers)
        return _emit_solve(report, "chi_g", args, out, err)

    if args.command == "chromatic":
        g = parse_graph(_read(args.graph))
        report = solver.chromatic_number(g, _budget(args))
        return _emit_solve(report, "chi", args, out, err)

    if args.command == "characterize":
        g = parse_graph(_read(args.graph))
        result = solver.characterize(g, _budget(args), args.workers)
        flags = {True: "true", False: "false"}
        if args.records:
            print(f"{result.chi} {result.chi_g} "
                  f"{int(result.equal)} {int(result.chi_g_is_3)}", file=out)
        else:
            print(f"chi = {result.chi}", file=out)
            print(f"chi_g = {result.chi_g}", file=out)
            print(f"equal = {flags[result.equal]}", file=out)
            print(f"chi_g_is_3 = {flags[result.chi_g_is_3]}", file=out)
        return EXIT_OK

    if args.command == "complete":
        engine, cache = _load_cache_engine(args)
        try:
            result = chi_g_complete(args.n, _budget(args), engine)
        finally:
            _store_cache(args, engine, cache)
        if args.records:
            print(f"{result.n} {result.chi_g} {_csv(result.color_set)}", file=out)
        else:
            print(f"chi_g(K_{result.n}) = {result.chi_g}", file=out)
            print(f"witness: {_csv(result.color_set)}", file=out)
        return EXIT_OK

    if args.command == "ap3":
        return _dispatch_ap3(args, out, err)

    if args.command == "table":
        engine, cache = _load_cache_engine(args)
        rows = tables.table_report(args.n_max, _budget(args), engine)
        _store_cache(args, engine, cache)
        out.write(tables.render_table(rows, records=args.records))
        statuses = {row.status for row in rows}
        if tables.STATUS_MISMATCH in statuses:
            print("reference mismatch detected", file=err)
            return EXIT_INVALID
        if tables.STATUS_UNPROVEN in statuses:
            return EXIT_BUDGET
        return EXIT_OK

    if args.command == "gen":
        family = GraphFamily(args.family, tuple(args.params))
        out.write(serialize_graph(family.build()))
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command!r}")


def _dispatch_ap3(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.ap3_command == "check":
        try:
            values = tuple(int(tok) for tok in args.elements.split(","))
        except ValueError:
            print(f"error: not a comma-separated integer list: {args.elements!r}",
                  file=err)
            return EXIT_USAGE
        ordered = tuple(sorted(set(values)))
        free = ap3.is_ap3_free(ordered)
        label = "3-AP-free" if free else "not 3-AP-free"
        print(f"{label}: ({_csv(values)})", file=out)
        return EXIT_OK if free else EXIT_INVALID

    engine, cache = _load_cache_engine(args)
    if args.ap3_command == "longest":
        result = engine.longest(args.m, _budget(args))
        _store_cache(args, engine, cache)  # proven ladder prefix only
        if args.records:
            status = "proven" if result.proven else "unproven"
            print(f"{args.m} {result.value} {status} {_csv(result.witness)}", file=out)
        else:
            suffix = "" if result.proven else " (unproven lower bound)"
            print(f"L({args.m}) = {result.value}{suffix}", file=out)
            print(f"witness: {_csv(result.witness)}", file=out)
        return EXIT_OK if result.proven else EXIT_BUDGET

    if args.ap3_command == "minspan":
        result = engine.min_span(args.k, _budget(args))
        _store_cache(args, engine, cache)
        if result.proven:
            if args.records:
                print(f"{args.k} {result.value} proven {_csv(result.witness)}", file=out)
            else:
                print(f"a({args.k}) = {result.value}", file=out)
                print(f"witness: {_csv(result.witness)}", file=out)
            return EXIT_OK
        if args.records:
            print(f"{args.k} - unproven", file=out)
        else:
            print(f"a({args.k}) unproven: exceeds {result.value}", file=out)
        return EXIT_BUDGET

    raise AssertionError(f"unhandled ap3 command {args.ap3_command!r}")


def _emit_solve(report: solver.SolveReport, label: str, args: argparse.Namespace,
                out: TextIO, err: TextIO) -> int:
    if report.status == solver.EXHAUSTED:
        print(f"budget exhausted after {report.nodes} nodes", file=err)
        return EXIT_BUDGET
    witness = report.witness
    colors = witness.colors if isinstance(witness, GracefulColoring) else witness
    if args.records:
        print(f"{label} {report.value} {_csv(colors)}", file=out)
    else:
        print(f"{label} = {report.value}", file=out)
        print(f"witness: {_csv(colors)}", file=out)
        print(f"nodes: {report.nodes}", file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))
