"""Exact Sudoku number sn(G).

Two independent routes are provided:

* :func:`sn_by_hitting_set` enumerates every proper chi-colouring.  A clue set
  S pins down target colouring ``c`` exactly when S meets the difference set
  ``{v : c'(v) != c(v)}`` of every other colouring ``c'``; sn is the smallest
  such S over all targets.
* :func:`sn_by_subset_search` tries vertex subsets in increasing size and asks
  the extension checker directly.

Both report the same witness: among optimal clue colourings, the one that is
smallest by (sorted clue vertices, clue colours).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product

from .coloring import (
    DEFAULT_ENUMERATION_CAP,
    ChiCertificate,
    Coloring,
    EnumerationOverflow,
    PartialColoring,
    canonical_colours,
    chromatic_number,
    iter_colourings,
)
from .extension import MANY, NONE, count_extensions, is_sudoku_coloring
from .graph import Graph

HITTING_SET = "hitting_set"
SUBSET_SEARCH = "subset_search"


class SolverTimeout(RuntimeError):
    pass


class SizeLimitExceeded(RuntimeError):
    """No Sudoku colouring with at most ``limit`` clues exists."""

    def __init__(self, limit: int):
        super().__init__(f"sn > {limit}")
        self.limit = limit


@dataclass(frozen=True)
class SnReport:
    n: int
    chi: int
    sn: int
    clue_colours: PartialColoring
    completion: Coloring
    method: str

    @property
    def clue_set(self) -> list[int]:
        return self.clue_colours.domain()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "chi": self.chi,
            "sn": self.sn,
            "clues": [{"v": v, "colour": c} for v, c in self.clue_colours.clues()],
            "method": self.method,
            "completion": self.completion.to_json(),
        }


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise SolverTimeout("sn computation exceeded its time limit")


def _finish(g: Graph, chi: int, clues: PartialColoring, method: str) -> SnReport:
    check = is_sudoku_coloring(g, clues, chi)
    if not check.ok:
        raise AssertionError(f"solver produced a non-Sudoku colouring: {check.reason}")
    sn = len(clues.domain())
    if g.n >= 1:
        assert sn <= g.n - 1, "sn(G) <= n - 1 violated"
    return SnReport(g.n, chi, sn, clues, check.extension.completion, method)


def _clue_colouring(n: int, k: int, vertices: tuple[int, ...], colours: tuple[int, ...]) -> PartialColoring:
    cols = [0] * n
    for v, c in zip(vertices, colours):
        cols[v] = c
    return PartialColoring(tuple(cols), k)


# --- minimum hitting set ----------------------------------------------------


def minimal_sets(sets: list[int]) -> list[int]:
    """Inclusion-minimal members of a family of bitmasks, smallest first."""
    out: list[int] = []
    for s in sorted(set(sets), key=lambda m: (m.bit_count(), m)):
        if not any(t & s == t for t in out):
            out.append(s)
    return out


def _greedy_hitting(sets: list[int]) -> int:
    chosen = 0
    unhit = sets
    size = 0
    while unhit:
        counts: dict[int, int] = {}
        for s in unhit:
            m = s
            while m:
                low = m & -m
                counts[low] = counts.get(low, 0) + 1
                m ^= low
        pick = max(counts, key=lambda b: (counts[b], -b))
        chosen |= pick
        size += 1
        unhit = [s for s in unhit if not s & chosen]
    return size


def _packing_bound(unhit: list[int]) -> int:
    """Number of pairwise disjoint sets found greedily; each needs its own element."""
    used = 0
    count = 0
    for s in unhit:
        if not s & used:
            used |= s
            count += 1
    return count


def min_hitting_set_size(sets: list[int], limit: int, deadline: float | None = None) -> int | None:
    """Size of a minimum hitting set of ``sets`` (bitmasks) if it is at most ``limit``."""
    sets = minimal_sets(sets)
    if not sets:
        return 0
    best = min(limit + 1, _greedy_hitting(sets))

    def bb(unhit: list[int], excluded: int, depth: int) -> None:
        nonlocal best
        if not unhit:
            best = min(best, depth)
            return
        if depth + _packing_bound(unhit) >= best:
            return
        _check_deadline(deadline)
        # branch on the smallest unhit set; elements tried earlier are excluded later
        pivot = min(unhit, key=lambda s: ((s & ~excluded).bit_count(), s)) & ~excluded
        m = pivot
        while m:
            low = m & -m
            m ^= low
            rest = []
            for s in unhit:
                if not s & low:
                    if not s & ~excluded:
                        break
                    rest.append(s)
            else:
                bb(rest, excluded, depth + 1)
            excluded |= low
            if depth + 1 >= best:
                return

    bb(sets, 0, 0)
    return best if best <= limit else None


def _first_hitting_combination(sets: list[int], n: int, size: int) -> tuple[int, ...] | None:
    for combo in combinations(range(n), size):
        mask = sum(1 << v for v in combo)
        if all(s & mask for s in sets):
            return combo
    return None


def sn_by_hitting_set(
    g: Graph,
    chi: ChiCertificate | None = None,
    cap: int | None = DEFAULT_ENUMERATION_CAP,
    deadline: float | None = None,
) -> SnReport:
    """sn(G) from the difference sets of all proper chi-colourings.

    Raises :class:`EnumerationOverflow` when there are more than ``cap`` colourings.
    """
    if chi is None:
        chi = chromatic_number(g)
    k = chi.chi
    n = g.n
    if n == 0:
        return _finish(g, k, PartialColoring((), k), HITTING_SET)
    colourings = []
    for i, t in enumerate(iter_colourings(g, k, cap=cap)):
        if i % 4096 == 0:
            _check_deadline(deadline)
        colourings.append(t)
    # relabelling colours preserves difference sets, so one target per orbit suffices
    targets = [t for t in colourings if canonical_colours(t) == t]
    best = n
    per_target: list[tuple[tuple[int, ...], list[int]]] = []
    for t in targets:
        diffs = []
        for other in colourings:
            if other is t:
                continue
            d = 0
            for v in range(n):
                if other[v] != t[v]:
                    d |= 1 << v
            diffs.append(d)
        diffs = minimal_sets(diffs)
        size = min_hitting_set_size(diffs, best, deadline)
        if size is None:
            continue
        if size < best:
            best = size
            per_target = []
        per_target.append((t, diffs))
    winner = None
    for t, diffs in per_target:
        combo = _first_hitting_combination(diffs, n, best)
        assert combo is not None
        key = (combo, canonical_colours(t[v] for v in combo))
        if winner is None or key < winner:
            winner = key
    assert winner is not None
    combo, colours = winner
    return _finish(g, k, _clue_colouring(n, k, combo, colours), HITTING_SET)


# --- subset search oracle ---------------------------------------------------


def _canonical_assignments(size: int, k: int):
    """Colour sequences of length ``size`` over 1..k in first-appearance form, lexicographically."""
    for seq in product(range(1, k + 1), repeat=size):
        if canonical_colours(seq) == seq:
            yield seq


def sn_by_subset_search(
    g: Graph,
    chi: ChiCertificate | None = None,
    size_limit: int | None = None,
    deadline: float | None = None,
) -> SnReport:
    """sn(G) by trying every clue set of increasing size against the extension checker.

    Exponential; meant for small graphs and for cross-checking the hitting-set route.
    """
    if chi is None:
        chi = chromatic_number(g)
    k = chi.chi
    n = g.n
    top = n if size_limit is None else min(n, size_limit)
    for size in range(0, top + 1):
        assignments = list(_canonical_assignments(size, k))
        for combo in combinations(range(n), size):
            _check_deadline(deadline)
            for colours in assignments:
                p = _clue_colouring(n, k, combo, colours)
                if any(p.colours[u] == p.colours[v] for u in combo for v in g.adj[u]):
                    continue
                ext = count_extensions(g, p, k)
                if ext.status not in (NONE, MANY):
                    return _finish(g, k, p, SUBSET_SEARCH)
    raise SizeLimitExceeded(top)


def sudoku_number(
    g: Graph, cap: int | None = DEFAULT_ENUMERATION_CAP, deadline: float | None = None
) -> SnReport:
    """Exact sn(G): hitting sets when the colourings fit under ``cap``, subset search otherwise."""
    chi = chromatic_number(g)
    try:
        return sn_by_hitting_set(g, chi, cap=cap, deadline=deadline)
    except EnumerationOverflow:
        return sn_by_subset_search(g, chi, deadline=deadline)
