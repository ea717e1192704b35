"""Command-line driver: ``zdgraph build | verify | jordan``.

Exit codes: 0 pass, 1 mismatch, 2 usage error, 3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import export
from .autgroup.jordan import non_jordan_report
from .construct import Case, truncation_graph
from .errors import ResourceBudgetExceeded
from .graph.invariants import invariant_report
from .ring import RingDesc
from .table import (BOX_RADIUS, compare_graph, component_checks, drop_one_edge, expected_gamma1,
                    expected_gamma2, plain, verify)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _ring(parser: argparse.ArgumentParser, d: int) -> RingDesc:
    try:
        return RingDesc.of(d)
    except ValueError as exc:
        parser.error(str(exc))


def _level(parser: argparse.ArgumentParser, value: int) -> int:
    if value < 1:
        parser.error(f"level must be >= 1, got {value}")
    return value


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_build(args, parser) -> int:
    ring = _ring(parser, args.d)
    level = _level(parser, args.level)
    case = Case(args.case)
    box = args.box if case is Case.FULL else None
    G = truncation_graph(ring, case, level, box)
    if args.drop_edge:
        G = drop_one_edge(G)
    config = {"d": args.d, "case": case.value, "level": level, "box": box,
              "seed": args.seed, "directed": args.directed}
    invariants, verdicts = {}, {}
    if args.json and not args.no_invariants:
        if case is Case.FULL:
            invariants = invariant_report(G, seed=args.seed).as_dict()
            verdicts = {c.name: c.passed for c in component_checks(ring, level, box or 0)}
        else:
            expected = expected_gamma1(level) if case is Case.GAMMA1 else expected_gamma2(ring.d, level)
            got, checks = compare_graph(case.value, G, expected, seed=args.seed)
            invariants = {k: plain(v) for k, v in got.items()}
            verdicts = {c.name: c.passed for c in checks}
    if args.dot:
        _write(args.dot, export.to_dot(G, directed=args.directed))
    if args.json:
        _write(args.json, export.dumps(export.graph_document(G, config, invariants, verdicts)))
    print(f"{case.value} d={args.d} level={level}: {G.n} vertices, {G.edge_count()} edges, "
          f"{len(G.arc_list())} arcs")
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    rings = [_ring(parser, d) for d in args.d]
    levels = [_level(parser, n) for n in args.level]
    reports = []
    for ring in rings:
        for n in levels:
            rep = verify(ring, n, seed=args.seed, samples=args.samples, aut=not args.no_aut,
                         drop_edge=args.drop_edge)
            reports.append(rep)
            print(f"== d={ring.d} n={n}: {'PASS' if rep.ok else 'FAIL'}")
            for line in rep.lines() if args.verbose else [c.line() for c in rep.mismatches() + rep.skipped()]:
                print("  " + line)
    if args.json:
        _write(args.json, json.dumps([r.as_dict() for r in reports], sort_keys=True, indent=2) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


def cmd_jordan(args, parser) -> int:
    ring = _ring(parser, args.d)
    if args.nmax < 3:
        parser.error("--nmax must be at least 3 (A_2n is simple only for 2n >= 5)")
    report = non_jordan_report(ring, args.nmax)
    if args.json:
        _write(args.json, json.dumps(report.as_dict(), sort_keys=True, indent=2) + "\n")
    print(f"d={ring.d}: lower bounds for the Jordan constant of the automorphism group")
    for row in report.rows:
        print(f"  n={row.n}  |S_{2 * row.n}|={row.symmetric_order}  bound={row.bound}  ({row.simplicity})")
    print("strictly increasing: " + ("yes" if report.strictly_increasing() else "no"))
    return EXIT_OK if report.strictly_increasing() else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zdgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a truncation and export it")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--case", choices=[c.value for c in Case], required=True)
    b.add_argument("--n", "--level", dest="level", type=int, required=True)
    b.add_argument("--box", type=int, default=BOX_RADIUS, help="parameter box radius for --case full")
    b.add_argument("--dot")
    b.add_argument("--json")
    b.add_argument("--directed", action="store_true")
    b.add_argument("--no-invariants", action="store_true")
    b.add_argument("--drop-edge", action="store_true", help=argparse.SUPPRESS)
    b.add_argument("--seed", type=int, default=0)

    v = sub.add_parser("verify", help="compare computed invariants with the closed forms")
    v.add_argument("--d", type=int, nargs="+", required=True)
    v.add_argument("--n", "--level", dest="level", type=int, nargs="+", required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--no-aut", action="store_true")
    v.add_argument("--drop-edge", action="store_true",
                   help="negative control: delete one edge of the second graph")
    v.add_argument("--json")
    v.add_argument("-v", "--verbose", action="store_true")

    j = sub.add_parser("jordan", help="lower bounds showing the automorphism group is not Jordan")
    j.add_argument("--d", type=int, required=True)
    j.add_argument("--nmax", type=int, required=True)
    j.add_argument("--json")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"build": cmd_build, "verify": cmd_verify, "jordan": cmd_jordan}[args.command]
    try:
        return handler(args, parser)
    except ResourceBudgetExceeded as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
