"""Swap distances between realizations of graphical degree sequences.

The distance between two realizations equals the halved size of their
symmetric difference minus the maximum number of circuits in an alternating
circuit decomposition of that difference; this package computes the exact
value (or a certified upper bound) together with a verified move script
realizing it, for undirected, bipartite and directed degree sequences.
"""

from .core_graphs import (
    BipartiteDegreeSequence,
    BipartiteGraph,
    BipartiteRepresentation,
    DegreeSequence,
    DirectedDegreeSequence,
    DirectedGraph,
    RedBlueGraph,
    SimpleGraph,
    bipartite_representation,
    degree_sequence,
    fingerprint,
    halved_hamming,
    symmetric_difference,
)
from .decomp import (
    DecompositionReport,
    elementarize,
    exact_max_decomposition,
    greedy_maximize,
    is_triangular_c6,
    resolve_kissing,
    shortest_alternating_circuit,
    split_even_repeat,
)
from .errors import (
    BudgetExceeded,
    CapExceeded,
    DegreeMismatch,
    DifferenceMismatch,
    NoEvenRepeat,
    NotBalanced,
    NotElementary,
    NotGraphical,
    NotKissing,
    ParseError,
    SwapDistError,
)
from .oracle import certify_identity, enumerate_realizations, exact_swap_distance
from .rbgraph import Circuit, Decomposition, euler_decompose, is_elementary, validate_circuit
from .realize import bipartite_realize, directed_realize, erdos_gallai_check, havel_hakimi
from .swapgen import (
    DistanceReport,
    Swap,
    SwapSequence,
    TriangularC6Swap,
    VerifyReport,
    apply_move,
    best_decomposition,
    circuit_to_swaps,
    directed_circuit_to_moves,
    directed_transform,
    distance_report,
    transform,
    transform_sequence,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
