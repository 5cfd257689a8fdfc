"""Counting completions of a partial colouring, up to a cap."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import UNCOLOURED, Coloring, ColoringError, PartialColoring, chromatic_number, is_proper
from .graph import Graph

NONE = "none"
UNIQUE = "unique"
MANY = "many"


@dataclass(frozen=True)
class ExtensionCount:
    status: str
    completion: Coloring | None = None

    @property
    def is_unique(self) -> bool:
        return self.status == UNIQUE


def _propagate(masks, avail, cols, n) -> bool:
    """Colour every vertex left with a single option; False on a wipe-out."""
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if cols[v]:
                continue
            a = avail[v]
            if not a:
                return False
            if a & (a - 1) == 0:
                c = a.bit_length() - 1
                cols[v] = c
                clear = ~a
                m = masks[v]
                while m:
                    low = m & -m
                    u = low.bit_length() - 1
                    avail[u] &= clear
                    m ^= low
                changed = True
    return True


def _search(masks, avail, cols, n, cap, found) -> None:
    if not _propagate(masks, avail, cols, n):
        return
    best, best_size = -1, 0
    for v in range(n):
        if not cols[v]:
            size = avail[v].bit_count()
            if best < 0 or size < best_size:
                best, best_size = v, size
    if best < 0:
        found.append(tuple(cols))
        return
    a = avail[best]
    while a and len(found) < cap:
        low = a & -a
        a ^= low
        avail2 = avail[:]
        cols2 = cols[:]
        cols2[best] = low.bit_length() - 1
        m = masks[best]
        while m:
            lm = m & -m
            avail2[lm.bit_length() - 1] &= ~low
            m ^= lm
        _search(masks, avail2, cols2, n, cap, found)


def count_extensions(
    g: Graph, p: PartialColoring, k: int | None = None, cap: int = 2
) -> ExtensionCount:
    """Classify the proper k-colourings agreeing with ``p`` as none, unique or many.

    ``many`` means at least ``cap`` completions exist; counting stops there.
    """
    if k is None:
        k = p.k
    if cap < 2:
        raise ValueError("cap must be at least 2")
    if not is_proper(g, p):
        raise ColoringError("partial colouring is not proper")
    if any(c > k for c in p.colours):
        raise ColoringError(f"partial colouring uses colours beyond palette 1..{k}")
    n = g.n
    masks = g.masks
    full = ((1 << (k + 1)) - 1) & ~1
    cols = list(p.colours)
    avail = [0 if c else full for c in cols]
    for v, c in enumerate(cols):
        if c != UNCOLOURED:
            m = masks[v]
            while m:
                low = m & -m
                avail[low.bit_length() - 1] &= ~(1 << c)
                m ^= low
    found: list[tuple[int, ...]] = []
    _search(masks, avail, cols, n, cap, found)
    if not found:
        return ExtensionCount(NONE)
    if len(found) == 1:
        return ExtensionCount(UNIQUE, Coloring(found[0], k))
    return ExtensionCount(MANY)


@dataclass(frozen=True)
class SudokuCheck:
    ok: bool
    reason: str
    extension: ExtensionCount | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_sudoku_coloring(g: Graph, p: PartialColoring, chi: int | None = None) -> SudokuCheck:
    """Proper, over a palette of exactly chi(G) colours, with exactly one completion."""
    if len(p.colours) != g.n:
        return SudokuCheck(False, f"length {len(p.colours)} does not match n={g.n}")
    if chi is None:
        chi = chromatic_number(g).chi
    if p.k != chi:
        return SudokuCheck(False, f"palette size {p.k} differs from chi={chi}")
    if not is_proper(g, p):
        return SudokuCheck(False, "not proper")
    ext = count_extensions(g, p, chi)
    if ext.status == NONE:
        return SudokuCheck(False, "no extension", ext)
    if ext.status == MANY:
        return SudokuCheck(False, "more than one extension", ext)
    return SudokuCheck(True, "unique extension", ext)
