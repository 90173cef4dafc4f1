"""Ban-Linial splits of cubic graphs: constructions, certificates and an exhaustive oracle."""

from .constructors import (
    build_odd_cycle_gadget,
    flow_to_k_bisection,
    repair_nearly_external,
    solve_tree_bipartite,
    solve_tree_cycle,
    split_from_3_edge_colouring,
)
from .decomposition import (
    BudgetExhausted,
    EdgeColouring3,
    NowhereZeroFlow,
    TreeCycleDecomposition,
    find_3_edge_colouring,
    find_cubic_tree_bipartite_complement,
    find_nowhere_zero_flow,
    find_tree_cycle_decomposition,
)
from .graph import (
    CubicGraph,
    Graph,
    Split,
    SplitReport,
    evaluate_split,
    induced_mono_graph,
    verify_ban_linial,
)
from .oracle import brute_force_ban_linial, external_bisection_exists, lemma_sweep
from .trees import (
    CherryPair,
    CubicTree,
    exhaustive_tree_split,
    find_cherry_pairs,
    split_cubic_tree_rooted,
    split_cubic_tree_unrooted,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "CherryPair",
    "CubicGraph",
    "CubicTree",
    "EdgeColouring3",
    "Graph",
    "NowhereZeroFlow",
    "Split",
    "SplitReport",
    "TreeCycleDecomposition",
    "brute_force_ban_linial",
    "build_odd_cycle_gadget",
    "evaluate_split",
    "exhaustive_tree_split",
    "external_bisection_exists",
    "find_3_edge_colouring",
    "find_cherry_pairs",
    "find_cubic_tree_bipartite_complement",
    "find_nowhere_zero_flow",
    "find_tree_cycle_decomposition",
    "flow_to_k_bisection",
    "induced_mono_graph",
    "lemma_sweep",
    "repair_nearly_external",
    "solve_tree_bipartite",
    "solve_tree_cycle",
    "split_cubic_tree_rooted",
    "split_cubic_tree_unrooted",
    "split_from_3_edge_colouring",
    "verify_ban_linial",
]
