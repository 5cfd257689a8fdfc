"""Exhaustive claim sweeps over small graphs."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Iterator

from .coloring import chromatic_number
from .graph import (
    GraphFormatError,
    Graph,
    graph_from_index,
    is_complete,
    is_connected,
    pair_order,
    parse_graph6,
    to_graph6,
)
from .solver import SolverTimeout, sn_by_hitting_set, sn_by_subset_search, sudoku_number
from .witness import build_witness

CLAIMS = ("theorem1", "bipartite_sn1", "witness", "oracle_equiv")
# asserted on every graph regardless of the selected claims
UPPER_BOUND = "upper_bound"
INTERNAL_MAX_N = 7
INTERNAL_OVERRIDE_MAX_N = 8


@dataclass
class SweepResult:
    n_range: tuple[int, int]
    claims: tuple[str, ...]
    graphs_checked: int = 0
    connected_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    timeouts: list[str] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    per_n: dict[int, dict[str, int]] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "n_range": list(self.n_range),
            "claims": list(self.claims),
            "graphs_checked": self.graphs_checked,
            "connected_checked": self.connected_checked,
            "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
            "violations": self.violations,
            "timeouts": self.timeouts,
            "skipped": self.skipped,
            "elapsed": round(self.elapsed, 3),
            "ok": self.ok,
        }


def check_graph(g: Graph, claims: Iterable[str], time_limit: float | None = None) -> dict:
    """Evaluate every selected claim on one graph.

    Returns ``{"connected": bool, "failed": [claim, ...], "timeout": bool}``.
    """
    claims = set(claims)
    n = g.n
    connected = is_connected(g)
    failed: list[str] = []
    deadline = None if time_limit is None else time.monotonic() + time_limit
    try:
        chi = chromatic_number(g)
        report = sn_by_hitting_set(g, chi, deadline=deadline) if n else None
        sn = report.sn if report else 0
        if n >= 1 and sn > n - 1:
            failed.append(UPPER_BOUND)
        if connected and n >= 2:
            if "theorem1" in claims and (sn == n - 1) != is_complete(g):
                failed.append("theorem1")
            if "bipartite_sn1" in claims and (sn == 1) != (chi.chi == 2):
                failed.append("bipartite_sn1")
        if "witness" in claims and connected and n >= 3 and not is_complete(g):
            try:
                w = build_witness(g)
                if len(w.partial.domain()) != n - 2 or sn > n - 2:
                    failed.append("witness")
            except AssertionError:
                failed.append("witness")
        if "oracle_equiv" in claims and n >= 1:
            other = sn_by_subset_search(g, chi, deadline=deadline)
            if other.sn != sn or other.clue_colours != report.clue_colours:
                failed.append("oracle_equiv")
    except SolverTimeout:
        return {"connected": connected, "failed": failed, "timeout": True}
    return {"connected": connected, "failed": failed, "timeout": False}


def _internal_job(args):
    n, index, claims, time_limit = args
    g = graph_from_index(n, index, pair_order(n))
    return n, to_graph6(g), check_graph(g, claims, time_limit)


def _stream_job(args):
    g6, claims, time_limit = args
    g = parse_graph6(g6)
    return g.n, g6, check_graph(g, claims, time_limit)


def _internal_jobs(n_min: int, n_max: int, claims, time_limit) -> Iterator[tuple]:
    for n in range(n_min, n_max + 1):
        for index in range(1 << (n * (n - 1) // 2)):
            yield n, index, claims, time_limit


def read_graph6_stream(lines: Iterable[str], n_max: int | None = None):
    """Split a graph6 stream into (line number, record) pairs and malformed-line reports."""
    records, skipped = [], []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except GraphFormatError as exc:
            skipped.append({"line": lineno, "error": str(exc)})
            continue
        if n_max is None or g.n <= n_max:
            records.append(line)
    return records, skipped


def run_sweep(
    n_max: int,
    claims: Iterable[str] = CLAIMS,
    n_min: int = 1,
    source: Iterable[str] | None = None,
    threads: int = 1,
    time_limit: float | None = None,
    allow_n8: bool = False,
) -> SweepResult:
    """Check claims on every labelled graph with ``n_min <= n <= n_max``.

    With ``source`` (lines of graph6) the given graphs are checked instead.
    """
    claims = tuple(claims)
    unknown = set(claims) - set(CLAIMS)
    if unknown:
        raise ValueError(f"unknown claims {sorted(unknown)}; choose from {CLAIMS}")
    start = time.monotonic()
    result = SweepResult((n_min, n_max), claims)
    if source is None:
        limit = INTERNAL_OVERRIDE_MAX_N if allow_n8 else INTERNAL_MAX_N
        if n_max > limit:
            raise ValueError(
                f"internal enumeration is limited to n <= {INTERNAL_MAX_N} "
                f"(n = {INTERNAL_OVERRIDE_MAX_N} with the override flag); use a graph6 corpus"
            )
        jobs: Iterable = _internal_jobs(n_min, n_max, claims, time_limit)
        worker = _internal_job
    else:
        records, result.skipped = read_graph6_stream(source, n_max)
        jobs = ((g6, claims, time_limit) for g6 in records if parse_graph6(g6).n >= n_min)
        worker = _stream_job

    if threads > 1:
        with Pool(threads) as pool:
            outcomes = list(pool.imap(worker, jobs, chunksize=256))
    else:
        outcomes = map(worker, jobs)

    for n, g6, out in outcomes:
        stats = result.per_n.setdefault(n, {"graphs": 0, "connected": 0})
        stats["graphs"] += 1
        result.graphs_checked += 1
        if out["connected"]:
            stats["connected"] += 1
            result.connected_checked += 1
        for claim in out["failed"]:
            result.violations.append({"graph6": g6, "claim": claim})
        if out["timeout"]:
            result.timeouts.append(g6)
    result.violations.sort(key=lambda d: (d["graph6"], d["claim"]))
    result.timeouts.sort()
    result.elapsed = time.monotonic() - start
    return result
