"""Command line interface.

Exit status: 0 success, 1 claim violation or non-unique verdict, 2 usage or
parse error.  Reports go to stdout as one JSON document; diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .coloring import ColoringError, EnumerationOverflow, PartialColoring, chromatic_number, is_proper
from .extension import count_extensions
from .graph import (
    FAMILIES,
    FamilySpec,
    Graph,
    GraphFormatError,
    generate,
    is_complete,
    is_connected,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .solver import SolverTimeout, sn_by_hitting_set, sn_by_subset_search
from .sweep import CLAIMS, run_sweep
from .witness import build_witness

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_graph(src: str) -> Graph:
    """Graph from a family spec (``cycle:5``), a graph6 or edge-list file, or a graph6 string."""
    if ":" in src and src.split(":", 1)[0] in FAMILIES:
        return generate(FamilySpec.parse(src))
    if os.path.exists(src):
        with open(src) as fh:
            text = fh.read()
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if lines and not any(ch.isdigit() or ch.isspace() for ch in lines[0].strip()):
            if len(lines) > 1:
                raise GraphFormatError(f"{src}: expected a single graph6 record, found {len(lines)}")
            return parse_graph6(lines[0])
        return parse_edge_list(text)
    return parse_graph6(src)


def _dump(doc: dict, compact: bool) -> None:
    print(json.dumps(doc, separators=(",", ":")) if compact else json.dumps(doc, indent=2))


def _deadline(args) -> float | None:
    return None if args.time_limit is None else time.monotonic() + args.time_limit


def cmd_analyze(args) -> int:
    g = load_graph(args.src)
    connected = is_connected(g)
    complete = is_complete(g)
    chi = chromatic_number(g)
    doc = {
        "graph6": to_graph6(g),
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "connected": connected,
        "complete": complete,
        "chi": chi.chi,
        "enumeration_overflow": False,
        "timeout": False,
    }
    deadline = _deadline(args)
    report = None
    try:
        try:
            report = sn_by_hitting_set(g, chi, deadline=deadline)
        except EnumerationOverflow:
            doc["enumeration_overflow"] = True
            report = sn_by_subset_search(g, chi, deadline=deadline)
    except SolverTimeout:
        doc["timeout"] = True
    if report is not None:
        doc.update(
            sn=report.sn,
            method=report.method,
            clues=report.to_json()["clues"],
            completion=report.completion.to_json(),
        )
    else:
        doc["sn"] = None
    if connected and not complete and g.n >= 3:
        doc["witness"] = build_witness(g).to_json()
    _dump(doc, args.json)
    return EXIT_OK


def _parse_clue(text: str) -> tuple[int, int]:
    try:
        v, c = text.split("=")
        return int(v), int(c)
    except ValueError:
        raise UsageError(f"clue {text!r} is not of the form v=c") from None


def cmd_verify(args) -> int:
    g = load_graph(args.src)
    chi = chromatic_number(g).chi
    clues = [_parse_clue(c) for c in args.clue or []]
    for v, c in clues:
        if not 0 <= v < g.n:
            raise UsageError(f"clue vertex {v} out of range 0..{g.n - 1}")
        if not 1 <= c <= chi:
            raise UsageError(f"clue colour {c} outside palette 1..{chi}")
    p = PartialColoring.from_clues(g.n, chi, clues)
    doc = {"n": g.n, "chi": chi, "clues": [{"v": v, "colour": c} for v, c in p.clues()]}
    if not is_proper(g, p):
        doc["verdict"] = "not_proper"
    else:
        ext = count_extensions(g, p, chi)
        doc["verdict"] = {"none": "no_extension", "unique": "unique", "many": "many"}[ext.status]
        if ext.is_unique:
            doc["completion"] = ext.completion.to_json()
    _dump(doc, args.json)
    return EXIT_OK if doc["verdict"] == "unique" else EXIT_FAIL


def cmd_sweep(args) -> int:
    claims = [c.strip() for c in args.claims.split(",") if c.strip()]
    bad = [c for c in claims if c not in CLAIMS]
    if bad:
        raise UsageError(f"unknown claims {bad}; choose from {', '.join(CLAIMS)}")
    source = None
    if args.source != "internal":
        if not args.source.startswith("graph6:"):
            raise UsageError("--source must be 'internal' or 'graph6:<path>'")
        path = args.source[len("graph6:") :]
        with open(path) as fh:
            source = fh.readlines()
    try:
        result = run_sweep(
            args.n_max,
            claims,
            n_min=args.n_min,
            source=source,
            threads=args.threads,
            time_limit=args.time_limit,
            allow_n8=args.allow_n8,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for rec in result.skipped:
        print(f"line {rec['line']}: skipped malformed record: {rec['error']}", file=sys.stderr)
    _dump(result.to_json(), args.json)
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_gen(args) -> int:
    print(to_graph6(generate(FamilySpec.parse(args.spec))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sudoku-number",
        description="Exact Sudoku numbers and unique-completion colourings of small graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="compact single-line JSON")
    common.add_argument("--time-limit", type=float, default=None, metavar="SEC",
                        help="per-graph limit for the sn computation")
    common.add_argument("--threads", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="report chi, sn and a two-hole witness")
    p.add_argument("src", help="family spec (cycle:5), graph6 string, or graph6/edge-list file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="classify the completions of a clue set")
    p.add_argument("src")
    p.add_argument("--clue", action="append", metavar="V=C", help="coloured vertex (repeatable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="check claims over all small graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--claims", default=",".join(CLAIMS))
    p.add_argument("--source", default="internal", help="internal | graph6:<path>")
    p.add_argument("--allow-n8", action="store_true", help="permit internal enumeration at n = 8")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="print a family graph in graph6")
    p.add_argument("spec", help="e.g. complete:3, complete_bipartite:2:3, sudoku:2")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, ColoringError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
