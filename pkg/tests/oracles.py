"""Brute-force reference computations, deliberately naive and independent of the package."""

from collections import Counter
from itertools import combinations, permutations, product


def proper_assignments(n, edges, k):
    return [
        cols for cols in product(range(1, k + 1), repeat=n)
        if all(cols[u] != cols[v] for u, v in edges)
    ]


def naive_chi(n, edges):
    if n == 0:
        return 0
    for k in range(1, n + 1):
        if proper_assignments(n, edges, k):
            return k


def completion_counts(n, edges, k):
    """Map every restriction (0 = uncoloured) of every proper k-colouring to its completion count."""
    counts = Counter()
    for cols in proper_assignments(n, edges, k):
        for mask in range(1 << n):
            counts[tuple(c if mask >> v & 1 else 0 for v, c in enumerate(cols))] += 1
    return counts


def naive_sn(n, edges):
    """Smallest clue set size whose restriction has exactly one completion."""
    k = naive_chi(n, edges)
    counts = completion_counts(n, edges, k)
    return min(sum(1 for c in p if c) for p, m in counts.items() if m == 1)


def shidoku_grid_count():
    """Count 4x4 Sudoku grids row by row with permutations."""
    rows = list(permutations(range(1, 5)))
    total = 0
    for r0 in rows:
        for r1 in rows:
            if any(r0[c] == r1[c] for c in range(4)):
                continue
            if {r0[0], r0[1], r1[0], r1[1]} != {1, 2, 3, 4} or {r0[2], r0[3], r1[2], r1[3]} != {1, 2, 3, 4}:
                continue
            for r2 in rows:
                if any(r2[c] in (r0[c], r1[c]) for c in range(4)):
                    continue
                for r3 in rows:
                    if any(r3[c] in (r0[c], r1[c], r2[c]) for c in range(4)):
                        continue
                    if {r2[0], r2[1], r3[0], r3[1]} == {1, 2, 3, 4} and {r2[2], r2[3], r3[2], r3[3]} == {1, 2, 3, 4}:
                        total += 1
    return total


def all_edge_sets(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [p for b, p in enumerate(pairs) if mask >> b & 1]
