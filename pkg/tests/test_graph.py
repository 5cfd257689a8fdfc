import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from sudoku_number.graph import (
    FamilySpec,
    Graph,
    GraphFormatError,
    generate,
    graph_from_index,
    is_complete,
    is_connected,
    labelled_graphs,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, chosen) if b])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize(
    "text, n, edges",
    [
        ("A?", 2, []),
        ("A_", 2, [(0, 1)]),
        ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
        ("C`", 4, [(0, 1), (2, 3)]),
        ("@", 1, []),
    ],
)
def test_parse_graph6_examples(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n
    assert g.edges() == edges


def test_to_graph6_examples():
    assert to_graph6(generate("complete:3")) == "Bw"
    assert to_graph6(generate("edgeless:2")) == "A?"
    assert to_graph6(generate("edgeless:1")) == "@"


@given(graphs())
def test_graph6_agrees_with_networkx(g):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert to_graph6(g) == expected
    assert parse_graph6(expected) == g


def test_graph6_large_header_round_trip():
    rng = random.Random(7)
    for n in (62, 63, 100, 128):
        g = Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.1])
        s = to_graph6(g)
        assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert parse_graph6(s) == g


def test_graph6_header_prefix_accepted():
    assert parse_graph6(">>graph6<<Bw") == generate("complete:3")


@pytest.mark.parametrize(
    "bad, offset",
    [
        ("", 0),
        ("B", 1),  # payload missing
        ("Bx", 1),  # padding bit set
        ("Bw?", 2),  # trailing byte
        ("B w", 1),  # illegal character
        ("~??", 3),  # truncated long header
    ],
)
def test_graph6_errors_name_byte_offset(bad, offset):
    with pytest.raises(GraphFormatError, match=f"byte {offset}"):
        parse_graph6(bad)


def test_graph_rejects_asymmetry_and_loops():
    with pytest.raises(ValueError):
        Graph(2, (frozenset({1}), frozenset()))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])


def test_edge_list_parser():
    g = parse_edge_list("# triangle plus isolated vertex\n4\n0 1\n1 2\n0 2\n")
    assert g.n == 4 and g.num_edges == 3
    assert parse_edge_list("0 1\n2 3") == parse_graph6("C`")
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_edge_list("0 1\n0 1 2\n")


@pytest.mark.parametrize(
    "spec, n, m, degree",
    [
        ("sudoku:2", 16, 56, 7),
        ("sudoku:3", 81, 810, 20),
        ("complete:4", 4, 6, 3),
        ("cycle:5", 5, 5, 2),
        ("complete_bipartite:3:3", 6, 9, 3),
    ],
)
def test_generators_regular(spec, n, m, degree):
    g = generate(spec)
    assert (g.n, g.num_edges) == (n, m)
    assert all(g.degree(v) == degree for v in range(n))


@pytest.mark.parametrize("k", [2, 3])
def test_sudoku_graph_matches_networkx(k):
    assert set(generate(f"sudoku:{k}").edges()) == set(nx.sudoku_graph(k).edges())


def test_sudoku_rows_are_cliques():
    k = 3
    g = generate("sudoku:3")
    side = k * k
    for r in range(side):
        row = range(r * side, (r + 1) * side)
        assert all(g.has_edge(a, b) for a in row for b in row if a != b)


def test_path_and_bipartite_structure():
    assert generate("path:4").edges() == [(0, 1), (1, 2), (2, 3)]
    assert generate("complete_bipartite:2:3").edges() == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]


@pytest.mark.parametrize(
    "text", ["cycle:2", "sudoku:1", "complete:0", "complete_bipartite:2", "petersen:10", "path:x"]
)
def test_invalid_family_specs(text):
    with pytest.raises(GraphFormatError):
        FamilySpec.parse(text)


@pytest.mark.parametrize(
    "spec", ["complete:5", "path:7", "cycle:6", "complete_bipartite:2:4", "sudoku:2", "edgeless:3"]
)
def test_generated_graphs_round_trip_and_handshake(spec):
    g = generate(spec)
    assert parse_graph6(to_graph6(g)) == g
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_edges


def test_connectivity_examples():
    assert is_connected(generate("path:3"))
    assert not is_connected(parse_graph6("C`"))
    assert is_connected(generate("edgeless:1"))
    assert is_connected(Graph(0, ()))


def test_completeness_examples():
    assert is_complete(generate("complete:5"))
    k4e = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert not is_complete(k4e)
    assert is_complete(generate("edgeless:1"))
    assert is_complete(Graph(0, ()))


@given(graphs())
@settings(max_examples=200)
def test_connectivity_agrees_with_networkx(g):
    if g.n:
        assert is_connected(g) == nx.is_connected(to_nx(g))


def test_labelled_enumeration_counts():
    # brute force over all edge subsets with networkx as the connectivity oracle
    for n, total, connected in [(3, 8, 4), (4, 64, 38)]:
        gs = list(labelled_graphs(n))
        assert len(gs) == total == len({to_graph6(g) for g in gs})
        assert sum(nx.is_connected(to_nx(g)) for g in gs) == connected
        assert sum(is_connected(g) for g in gs) == connected


def test_graph_from_index_uses_graph6_bit_order():
    # index bit b is the b-th graph6 payload bit
    assert to_graph6(graph_from_index(4, 0b100001)) == "C`"
