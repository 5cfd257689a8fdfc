"""Simple undirected graphs: representation, graph6/edge-list I/O and generators.

Vertices are the integers ``0..n-1``.  A :class:`Graph` is immutable; the
adjacency is stored both as frozensets (for readable code) and as integer
bitmasks (for the search routines).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

# graph6 itself goes far beyond this; the exact solvers are limited much earlier.
MAX_VERTICES = 258047

FAMILIES = ("complete", "path", "cycle", "complete_bipartite", "sudoku", "edgeless")


class GraphFormatError(ValueError):
    """Raised for malformed graph6 / edge-list / family-spec input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, row in enumerate(self.adj):
            for u in row:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric edge {v}->{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(r) for r in rows))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        rows = tuple(frozenset(u for u in range(len(masks)) if m >> u & 1) for m in masks)
        return cls(len(masks), rows)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency rows as bitmasks: bit ``u`` of ``masks[v]`` is set iff uv is an edge."""
        return tuple(sum(1 << u for u in row) for row in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def is_connected(g: Graph) -> bool:
    """Reachability from vertex 0; the graphs on 0 or 1 vertices count as connected."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    masks = g.masks
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_complete(g: Graph) -> bool:
    return all(len(row) == g.n - 1 for row in g.adj)


# --- graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n <= MAX_VERTICES:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"n={n} exceeds graph6 capacity of {MAX_VERTICES}")


def to_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [_encode_n(g.n)]
    for p in range(0, len(bits), 6):
        val = 0
        for b in bits[p : p + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    offset = 0
    if s.startswith(">>graph6<<"):
        offset = 10
    data = s[offset:]
    if not data:
        raise GraphFormatError(f"empty graph6 record at byte {offset}")
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r} at byte {offset + i}")
    vals = [ord(ch) - 63 for ch in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        raise GraphFormatError(
            f"graph6 headers beyond {MAX_VERTICES} vertices unsupported at byte {offset + 1}"
        )
    else:
        if len(vals) < 4:
            raise GraphFormatError(f"truncated graph6 size header at byte {offset + len(vals)}")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if n < 63:
            raise GraphFormatError(f"non-canonical graph6 size header at byte {offset}")
        pos = 4
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    payload = vals[pos:]
    if len(payload) < nbytes:
        raise GraphFormatError(
            f"truncated graph6 payload at byte {offset + len(vals)}: "
            f"expected {nbytes} data bytes, got {len(payload)}"
        )
    if len(payload) > nbytes:
        raise GraphFormatError(f"trailing data in graph6 record at byte {offset + pos + nbytes}")
    pad = nbytes * 6 - nbits
    if pad and payload[-1] & ((1 << pad) - 1):
        raise GraphFormatError(f"non-zero graph6 padding bits at byte {offset + pos + nbytes - 1}")
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    return Graph.from_masks(masks)


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; a line holding a single integer fixes the vertex count.

    Blank lines and ``#`` comments are ignored.  Without an explicit count,
    n is one more than the largest vertex mentioned.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(nums) == 1 and n is None and not edges:
            n = nums[0]
        elif len(nums) == 2:
            edges.append((nums[0], nums[1]))
        else:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


# --- families ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        arity = 2 if self.family == "complete_bipartite" else 1
        if self.family not in FAMILIES:
            raise GraphFormatError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if len(self.params) != arity:
            raise GraphFormatError(f"{self.family} takes {arity} parameter(s), got {len(self.params)}")
        if any(p < 1 for p in self.params):
            raise GraphFormatError(f"{self.family} parameters must be >= 1, got {self.params}")
        if self.family == "cycle" and self.params[0] < 3:
            raise GraphFormatError(f"cycle needs n >= 3, got {self.params[0]}")
        if self.family == "sudoku" and self.params[0] < 2:
            raise GraphFormatError(f"sudoku needs block order k >= 2, got {self.params[0]}")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``name:param[:param]``, e.g. ``complete_bipartite:2:3``."""
        name, *rest = text.strip().split(":")
        try:
            params = tuple(int(p) for p in rest)
        except ValueError:
            raise GraphFormatError(f"non-integer parameter in family spec {text!r}") from None
        return cls(name, params)

    def __str__(self) -> str:
        return ":".join([self.family, *map(str, self.params)])


def sudoku_graph(k: int) -> Graph:
    """Cells of a k^2 x k^2 grid in row-major order, adjacent when they share a row, column or box."""
    side = k * k
    edges = []
    for a, b in combinations(range(side * side), 2):
        ra, ca = divmod(a, side)
        rb, cb = divmod(b, side)
        if ra == rb or ca == cb or (ra // k == rb // k and ca // k == cb // k):
            edges.append((a, b))
    return Graph.from_edges(side * side, edges)


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    p = spec.params
    if spec.family == "complete":
        return Graph.from_edges(p[0], combinations(range(p[0]), 2))
    if spec.family == "edgeless":
        return Graph.from_edges(p[0], [])
    if spec.family == "path":
        return Graph.from_edges(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if spec.family == "cycle":
        return Graph.from_edges(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    if spec.family == "complete_bipartite":
        a, b = p
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    return sudoku_graph(p[0])


# --- labelled enumeration ---------------------------------------------------


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_index(n: int, index: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    """Labelled graph whose edge set is given by the bits of ``index`` over :func:`pair_order`."""
    pairs = pairs or pair_order(n)
    masks = [0] * n
    for b, (i, j) in enumerate(pairs):
        if index >> b & 1:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    return Graph.from_masks(masks)


def labelled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labelled graphs on n vertices."""
    pairs = pair_order(n)
    for index in range(1 << len(pairs)):
        yield graph_from_index(n, index, pairs)
