import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_edge_sets, naive_chi, proper_assignments, shidoku_grid_count
from sudoku_number.coloring import (
    UNCOLOURED,
    Coloring,
    ColoringError,
    EnumerationOverflow,
    PartialColoring,
    canonical_colours,
    chromatic_number,
    colours_on,
    enumerate_colorings,
    is_proper,
    restrict,
)
from sudoku_number.graph import Graph, generate
from test_graph import graphs

K3 = generate("complete:3")
SHIDOKU_GRIDS = 288  # brute-force count from oracles.shidoku_grid_count


def test_shidoku_oracle_value():
    assert shidoku_grid_count() == SHIDOKU_GRIDS


def test_is_proper_examples():
    assert is_proper(generate("cycle:4"), PartialColoring((1, 2, 1, 2), 2))
    k2 = generate("complete:2")
    assert not is_proper(k2, PartialColoring((1, 1), 2))
    assert is_proper(k2, PartialColoring((1, UNCOLOURED), 2))
    with pytest.raises(ColoringError):
        is_proper(k2, PartialColoring((1,), 2))


def test_palette_validation():
    with pytest.raises(ColoringError):
        Coloring((1, 0), 2)
    with pytest.raises(ColoringError):
        PartialColoring((3,), 2)


@pytest.mark.parametrize("spec, chi", [("cycle:5", 3), ("complete:6", 6), ("sudoku:2", 4), ("cycle:6", 2)])
def test_chromatic_number_examples(spec, chi):
    cert = chromatic_number(generate(spec))
    assert cert.chi == chi
    assert cert.witness.k == chi
    assert is_proper(generate(spec), cert.witness)


@pytest.mark.parametrize("n", range(1, 9))
def test_chromatic_number_complete(n):
    assert chromatic_number(generate(f"complete:{n}")).chi == n


def test_chromatic_number_empty_graph():
    cert = chromatic_number(Graph(0, ()))
    assert cert.chi == 0 and cert.witness.colours == ()


@pytest.mark.parametrize("n", range(1, 6))
def test_chromatic_number_matches_naive_oracle_exhaustively(n):
    for edges in all_edge_sets(n):
        g = Graph.from_edges(n, edges)
        cert = chromatic_number(g)
        assert cert.chi == naive_chi(n, edges)
        assert set(cert.witness.colours) == set(range(1, cert.chi + 1))


@given(graphs(max_n=6))
@settings(max_examples=150, deadline=None)
def test_chromatic_number_matches_naive_oracle_n6(g):
    cert = chromatic_number(g)
    assert cert.chi == naive_chi(g.n, g.edges())
    assert chromatic_number(g) == cert  # deterministic


def test_enumerate_examples():
    assert len(enumerate_colorings(K3, 3)) == 6
    assert [c.colours for c in enumerate_colorings(K3, 3, canonical_only=True)] == [(1, 2, 3)]
    assert len(enumerate_colorings(generate("sudoku:2"), 4)) == SHIDOKU_GRIDS


@given(graphs(max_n=6), st.integers(1, 4))
@settings(max_examples=150, deadline=None)
def test_enumerate_matches_brute_force_in_order(g, k):
    got = [c.colours for c in enumerate_colorings(g, k)]
    assert got == proper_assignments(g.n, g.edges(), k)  # product() order is lexicographic
    canon = [c.colours for c in enumerate_colorings(g, k, canonical_only=True)]
    assert canon == [t for t in got if canonical_colours(t) == t]
    # each canonical colouring with j colours stands for k!/(k-j)! labelled ones
    assert len(got) == sum(math.perm(k, len(set(t))) for t in canon)


def test_enumerate_chi_count_is_factorial_multiple():
    g = generate("sudoku:2")
    canon = enumerate_colorings(g, 4, canonical_only=True)
    assert len(canon) * math.factorial(4) == SHIDOKU_GRIDS


def test_enumerate_overflow_is_explicit():
    with pytest.raises(EnumerationOverflow):
        enumerate_colorings(generate("edgeless:5"), 3, cap=100)
    assert len(enumerate_colorings(generate("edgeless:5"), 3, cap=243)) == 243


def test_restrict_examples():
    c = Coloring((1, 2, 3), 3)
    assert restrict(c, {0, 1}).colours == (1, 2, UNCOLOURED)
    assert restrict(c, range(3)).colours == c.colours
    assert restrict(c, set()).colours == (0, 0, 0)
    assert restrict(c, set()).k == 3


def test_colours_on_examples():
    assert colours_on(PartialColoring((1, 2, 0), 3), {0, 1, 2}) == {1, 2}
    assert colours_on(PartialColoring((1, 2, 0), 3), set()) == set()
    assert colours_on(PartialColoring((1, 1, 2), 2), {0, 2}) == {1, 2}


def test_partial_colouring_serialises_with_zero_for_uncoloured():
    p = restrict(Coloring((2, 1, 3), 3), {1})
    assert json.dumps(p.to_json()) == "[0, 1, 0]"


def test_canonical_colours_is_orbit_minimum():
    assert canonical_colours((3, 0, 1, 3, 2)) == (1, 0, 2, 1, 3)
