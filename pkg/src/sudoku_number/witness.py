"""Two-hole Sudoku colourings for connected non-complete graphs.

Every connected graph that is not complete admits a Sudoku colouring with
exactly two uncoloured vertices, so sn(G) <= n - 2 for it.  The construction:

1. Take a chi-colouring and push it to a *stable* colouring: no improving move
   (see :func:`stabilize`) can remove a colour-1 vertex.  Afterwards every
   colour-1 vertex is full and has a full neighbour of every other colour.
2. Two nonadjacent full vertices u, v: uncolour both.  Each still sees
   chi - 1 colours, so each has one forced colour.
3. Otherwise colour 1 sits on a single vertex v.  If v has more than chi - 1
   neighbours some colour c repeats around v; uncolour v and a full
   colour-c neighbour u.
4. Otherwise {v} + N(v) is a clique.  Take w outside it next to some u in
   N(v), move colour 1 from v to w and uncolour u and v.

Cases 3 and 4 leave an adjacent pair where one hole sees chi - 1 colours and
the other a subset of size chi - 2, which again forces both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    UNCOLOURED,
    Coloring,
    ColoringError,
    PartialColoring,
    chromatic_number,
    colours_on,
    is_proper,
)
from .extension import is_sudoku_coloring
from .graph import Graph, is_complete, is_connected

NONEDGE_PAIR = "nonedge_pair"
EDGE_PAIR = "edge_pair"

FULL_NONADJACENT = "full_nonadjacent"
BIG_NEIGHBOURHOOD = "big_neighbourhood"
OUTSIDE_VERTEX = "outside_vertex"


class WitnessPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class StableColoring:
    base: Coloring
    moves_applied: int


@dataclass(frozen=True)
class SudokuWitness:
    """``uncoloured`` is ordered as the pattern checks take it.

    For ``edge_pair`` the first hole is the one whose neighbourhood shows
    chi - 1 colours.
    """

    partial: PartialColoring
    pattern: str
    uncoloured: tuple[int, int]
    provenance: str
    stable: StableColoring

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern,
            "provenance": self.provenance,
            "uncoloured": list(self.uncoloured),
            "clues": [{"v": v, "colour": c} for v, c in self.partial.clues()],
        }


def _require_proper(g: Graph, c: Coloring) -> None:
    if not is_proper(g, c):
        raise ColoringError("colouring is not proper")


def _is_full(g: Graph, cols, v: int, k: int) -> bool:
    return len({cols[u] for u in g.adj[v]} - {UNCOLOURED}) == k - 1


def full_vertices(g: Graph, c: Coloring) -> set[int]:
    """Vertices whose neighbours carry every colour other than their own."""
    _require_proper(g, c)
    return {v for v in range(g.n) if len(colours_on(c, g.adj[v])) == c.k - 1}


def _holes(p: PartialColoring, u: int, v: int) -> None:
    if u == v or sorted(p.uncoloured()) != sorted((u, v)):
        raise ValueError(f"uncoloured vertices are {p.uncoloured()}, expected exactly {{{u}, {v}}}")


def check_pattern_i(g: Graph, p: PartialColoring, u: int, v: int) -> bool:
    """Nonadjacent holes that each see chi - 1 colours (palette size is taken as chi)."""
    _holes(p, u, v)
    k = p.k
    return (
        not g.has_edge(u, v)
        and len(colours_on(p, g.adj[u])) == k - 1
        and len(colours_on(p, g.adj[v])) == k - 1
    )


def check_pattern_ii(g: Graph, p: PartialColoring, u: int, v: int) -> bool:
    """Adjacent holes: u sees chi - 1 colours, v sees chi - 2 of those same colours."""
    _holes(p, u, v)
    k = p.k
    seen_u = colours_on(p, g.adj[u])
    seen_v = colours_on(p, g.adj[v])
    return (
        g.has_edge(u, v)
        and len(seen_u) == k - 1
        and len(seen_v) == k - 2
        and seen_v <= seen_u
    )


def _improving_move(g: Graph, cols: list[int], k: int) -> bool:
    """Apply the first improving move on a colour-1 vertex; False if none applies."""
    for v in range(g.n):
        if cols[v] != 1:
            continue
        for c in range(2, k + 1):
            nbrs = [u for u in sorted(g.adj[v]) if cols[u] == c]
            if not nbrs:
                cols[v] = c
                return True
            if any(_is_full(g, cols, u, k) for u in nbrs):
                continue
            # nbrs is independent and each misses some colour other than 1 and c
            new = {}
            for u in nbrs:
                seen = {cols[x] for x in g.adj[u]}
                new[u] = min(x for x in range(2, k + 1) if x != c and x not in seen)
            for u, cu in new.items():
                cols[u] = cu
            cols[v] = c
            return True
    return False


def stabilize(g: Graph, c: Coloring) -> StableColoring:
    """Apply improving moves until none is left.

    Move A recolours a colour-1 vertex v to a colour c absent from N(v).  Move B
    handles a colour c whose every occurrence on N(v) is at a non-full vertex:
    each such neighbour takes a colour it does not see, then v takes c.  Each
    move removes exactly one colour-1 vertex.
    """
    _require_proper(g, c)
    k = c.k
    cols = list(c.colours)
    moves = 0
    ones = cols.count(1)
    while _improving_move(g, cols, k):
        moves += 1
        now = cols.count(1)
        assert now == ones - 1, "improving move must remove exactly one colour-1 vertex"
        ones = now
        assert moves <= g.n
    out = Coloring(tuple(cols), k)
    assert is_proper(g, out)
    return StableColoring(out, moves)


def _check_stable(g: Graph, cols, k: int) -> None:
    for v in range(g.n):
        if cols[v] == 1:
            assert _is_full(g, cols, v, k)
            for c in range(2, k + 1):
                assert any(cols[u] == c and _is_full(g, cols, u, k) for u in g.adj[v])


def build_witness(g: Graph) -> SudokuWitness:
    """A verified Sudoku colouring of ``g`` with exactly two uncoloured vertices."""
    if g.n < 3:
        raise WitnessPreconditionError(f"need at least 3 vertices, got {g.n}")
    if not is_connected(g):
        raise WitnessPreconditionError("graph is disconnected")
    if is_complete(g):
        raise WitnessPreconditionError("graph is complete")

    chi = chromatic_number(g)
    k = chi.chi
    stable = stabilize(g, chi.witness)
    phi = stable.base
    cols = phi.colours
    _check_stable(g, cols, k)
    full = sorted(full_vertices(g, phi))

    witness = None
    for i, u in enumerate(full):
        for v in full[i + 1 :]:
            if not g.has_edge(u, v):
                psi = phi.uncolour(u, v)
                assert check_pattern_i(g, psi, u, v)
                witness = SudokuWitness(psi, NONEDGE_PAIR, (u, v), FULL_NONADJACENT, stable)
                break
        if witness:
            break

    if witness is None:
        ones = [x for x in range(g.n) if cols[x] == 1]
        if len(ones) != 1:
            raise AssertionError(f"expected a single colour-1 vertex, found {ones}")
        v = ones[0]
        nbrs = sorted(g.adj[v])
        if len(nbrs) > k - 1:
            c = min(x for x in range(2, k + 1) if sum(cols[y] == x for y in nbrs) >= 2)
            u = min(y for y in nbrs if cols[y] == c and _is_full(g, cols, y, k))
            psi = phi.uncolour(u, v)
            assert check_pattern_ii(g, psi, v, u)
            witness = SudokuWitness(psi, EDGE_PAIR, (v, u), BIG_NEIGHBOURHOOD, stable)
        else:
            closed = set(nbrs) | {v}
            w = min(x for x in range(g.n) if x not in closed and g.adj[x] & set(nbrs))
            u = min(g.adj[w] & set(nbrs))
            recoloured = list(cols)
            recoloured[w] = 1
            recoloured[u] = recoloured[v] = UNCOLOURED
            psi = PartialColoring(tuple(recoloured), k)
            assert check_pattern_ii(g, psi, u, v)
            witness = SudokuWitness(psi, EDGE_PAIR, (u, v), OUTSIDE_VERTEX, stable)

    check = is_sudoku_coloring(g, witness.partial, k)
    if not check.ok:
        raise AssertionError(f"two-hole construction failed verification: {check.reason}")
    return witness
