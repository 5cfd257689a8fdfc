"""Proper colourings: data model, exact chromatic number and enumeration.

Colours are drawn from ``1..k``.  In a :class:`PartialColoring` the value
``UNCOLOURED`` (0) marks a vertex without a colour; 0 is never a colour.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph

UNCOLOURED = 0
DEFAULT_ENUMERATION_CAP = 2_000_000


class ColoringError(ValueError):
    """A colouring does not fit the graph, or is not proper where it must be."""


class EnumerationOverflow(RuntimeError):
    """More colourings exist than the enumeration cap allows."""

    def __init__(self, cap: int):
        super().__init__(f"more than {cap} colourings")
        self.cap = cap


@dataclass(frozen=True)
class PartialColoring:
    colours: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        for v, c in enumerate(self.colours):
            if not 0 <= c <= self.k:
                raise ColoringError(f"colour {c} at vertex {v} outside palette 1..{self.k}")

    @classmethod
    def empty(cls, n: int, k: int) -> PartialColoring:
        return cls((UNCOLOURED,) * n, k)

    @classmethod
    def from_clues(cls, n: int, k: int, clues: Iterable[tuple[int, int]]) -> PartialColoring:
        cols = [UNCOLOURED] * n
        for v, c in clues:
            if not 0 <= v < n:
                raise ColoringError(f"clue vertex {v} out of range for n={n}")
            if not 1 <= c <= k:
                raise ColoringError(f"clue colour {c} outside palette 1..{k}")
            cols[v] = c
        return cls(tuple(cols), k)

    @property
    def n(self) -> int:
        return len(self.colours)

    def domain(self) -> list[int]:
        """Coloured vertices in increasing order."""
        return [v for v, c in enumerate(self.colours) if c != UNCOLOURED]

    def uncoloured(self) -> list[int]:
        return [v for v, c in enumerate(self.colours) if c == UNCOLOURED]

    def clues(self) -> list[tuple[int, int]]:
        return [(v, c) for v, c in enumerate(self.colours) if c != UNCOLOURED]

    def uncolour(self, *vertices: int) -> PartialColoring:
        cols = list(self.colours)
        for v in vertices:
            cols[v] = UNCOLOURED
        return PartialColoring(tuple(cols), self.k)

    def to_json(self) -> list[int]:
        return list(self.colours)


@dataclass(frozen=True)
class Coloring:
    """Total colouring; every vertex has a colour in ``1..k``."""

    colours: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        for v, c in enumerate(self.colours):
            if not 1 <= c <= self.k:
                raise ColoringError(f"colour {c} at vertex {v} outside palette 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.colours)

    def as_partial(self) -> PartialColoring:
        return PartialColoring(self.colours, self.k)

    def uncolour(self, *vertices: int) -> PartialColoring:
        """The partial colouring obtained by removing the colours of ``vertices``."""
        return self.as_partial().uncolour(*vertices)

    def to_json(self) -> list[int]:
        return list(self.colours)


@dataclass(frozen=True)
class ChiCertificate:
    chi: int
    witness: Coloring


def is_proper(g: Graph, p: PartialColoring | Coloring) -> bool:
    if len(p.colours) != g.n:
        raise ColoringError(f"colouring has length {len(p.colours)}, graph has {g.n} vertices")
    cols = p.colours
    for u, v in g.edges():
        if cols[u] != UNCOLOURED and cols[u] == cols[v]:
            return False
    return True


def restrict(c: Coloring, keep: Iterable[int]) -> PartialColoring:
    keep = set(keep)
    return PartialColoring(
        tuple(col if v in keep else UNCOLOURED for v, col in enumerate(c.colours)), c.k
    )


def colours_on(p: PartialColoring | Coloring, s: Iterable[int]) -> set[int]:
    """Colours appearing on the coloured members of ``s``."""
    cols = p.colours
    return {cols[v] for v in s if cols[v] != UNCOLOURED}


def canonical_colours(colours: Iterable[int]) -> tuple[int, ...]:
    """Relabel colours in order of first appearance (uncoloured entries stay 0).

    This is the lexicographically smallest member of the colour-permutation orbit.
    """
    relabel: dict[int, int] = {}
    out = []
    for c in colours:
        if c == UNCOLOURED:
            out.append(UNCOLOURED)
        else:
            if c not in relabel:
                relabel[c] = len(relabel) + 1
            out.append(relabel[c])
    return tuple(out)


# --- chromatic number -------------------------------------------------------


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last order, reversed so the densest core is coloured first."""
    remaining = set(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    removed = []
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        removed.append(v)
        remaining.discard(v)
        for u in g.adj[v]:
            if u in remaining:
                deg[u] -= 1
    return removed[::-1]


def _greedy(g: Graph, order: list[int]) -> list[int]:
    cols = [0] * g.n
    for v in order:
        used = {cols[u] for u in g.adj[v]}
        c = 1
        while c in used:
            c += 1
        cols[v] = c
    return cols


def _greedy_clique_size(g: Graph) -> int:
    best = 1 if g.n else 0
    masks = g.masks
    for start in range(g.n):
        size, cand = 1, masks[start]
        while cand:
            # highest-degree candidate within the candidate set
            v = max(
                (u for u in range(g.n) if cand >> u & 1),
                key=lambda u: ((masks[u] & cand).bit_count(), -u),
            )
            size += 1
            cand &= masks[v]
        best = max(best, size)
    return best


def _k_colour(g: Graph, order: list[int], k: int) -> list[int] | None:
    """Backtracking k-colouring along ``order``; a new colour is only ever max-used + 1."""
    n = g.n
    masks = g.masks
    cols = [0] * n
    # colour-availability bitmask per vertex is recomputed from coloured neighbours
    pos = 0
    top = [0] * (n + 1)  # highest colour in use before placing order[i]
    trial = [0] * n
    while True:
        if pos == n:
            return cols
        v = order[pos]
        forbidden = 0
        m = masks[v]
        while m:
            low = m & -m
            cu = cols[low.bit_length() - 1]
            if cu:
                forbidden |= 1 << cu
            m ^= low
        limit = min(k, top[pos] + 1)
        c = trial[pos] + 1
        while c <= limit and forbidden >> c & 1:
            c += 1
        if c <= limit:
            trial[pos] = c
            cols[v] = c
            top[pos + 1] = max(top[pos], c)
            pos += 1
            if pos < n:
                trial[pos] = 0
        else:
            cols[v] = 0
            trial[pos] = 0
            pos -= 1
            if pos < 0:
                return None
            cols[order[pos]] = 0


def chromatic_number(g: Graph) -> ChiCertificate:
    """Exact chromatic number with a witness colouring (deterministic)."""
    if g.n == 0:
        return ChiCertificate(0, Coloring((), 0))
    order = degeneracy_order(g)
    greedy = _greedy(g, order)
    upper = max(greedy)
    lower = _greedy_clique_size(g)
    found = greedy
    chi = upper
    for k in range(lower, upper):
        sol = _k_colour(g, order, k)
        if sol is not None:
            found, chi = sol, k
            break
    witness = Coloring(tuple(found), chi)
    assert is_proper(g, witness)
    # minimality of chi forces every colour to appear
    assert set(found) == set(range(1, chi + 1)), "chi-colouring must use every colour"
    return ChiCertificate(chi, witness)


# --- enumeration ------------------------------------------------------------


def iter_colourings(
    g: Graph, k: int, canonical_only: bool = False, cap: int | None = DEFAULT_ENUMERATION_CAP
) -> Iterator[tuple[int, ...]]:
    """Proper k-colourings as raw colour tuples, in lexicographic order.

    Raises :class:`EnumerationOverflow` instead of yielding colouring number cap + 1.
    """
    if k < 1:
        raise ValueError("palette size must be >= 1")
    n = g.n
    if n == 0:
        yield ()
        return
    masks = g.masks
    # only neighbours with smaller index are already coloured in vertex order
    earlier = [masks[v] & ((1 << v) - 1) for v in range(n)]
    cols = [0] * n
    top = [0] * (n + 1)
    count = 0
    pos = 0
    cols[0] = 0
    while pos >= 0:
        v = pos
        c = cols[v] + 1
        limit = min(k, top[v] + 1) if canonical_only else k
        m = earlier[v]
        forbidden = 0
        while m:
            low = m & -m
            forbidden |= 1 << cols[low.bit_length() - 1]
            m ^= low
        while c <= limit and forbidden >> c & 1:
            c += 1
        if c > limit:
            cols[v] = 0
            pos -= 1
            continue
        cols[v] = c
        top[v + 1] = top[v] if top[v] >= c else c
        if v == n - 1:
            count += 1
            if cap is not None and count > cap:
                raise EnumerationOverflow(cap)
            yield tuple(cols)
        else:
            pos += 1
            cols[pos] = 0


def enumerate_colorings(
    g: Graph, k: int, canonical_only: bool = False, cap: int | None = DEFAULT_ENUMERATION_CAP
) -> list[Coloring]:
    """Every proper k-colouring exactly once, lexicographically ordered.

    With ``canonical_only`` only colourings whose colours first appear in the
    order 1, 2, 3, ... are produced, one per colour-permutation orbit.
    """
    return [Coloring(t, k) for t in iter_colourings(g, k, canonical_only, cap)]
