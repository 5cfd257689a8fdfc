"""Sudoku numbers of graphs: exact computation and two-hole unique-completion colourings."""

from .coloring import (
    UNCOLOURED,
    ChiCertificate,
    Coloring,
    ColoringError,
    EnumerationOverflow,
    PartialColoring,
    chromatic_number,
    colours_on,
    enumerate_colorings,
    is_proper,
    restrict,
)
from .extension import ExtensionCount, count_extensions, is_sudoku_coloring
from .graph import (
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
from .solver import SnReport, sn_by_hitting_set, sn_by_subset_search, sudoku_number
from .witness import (
    StableColoring,
    SudokuWitness,
    build_witness,
    check_pattern_i,
    check_pattern_ii,
    full_vertices,
    stabilize,
)

__version__ = "0.1.0"
