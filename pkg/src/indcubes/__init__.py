"""Exact combinatorics of independent subsets of path and cycle powers."""

from .counting import (
    HFibSequence,
    binom,
    convolve_self,
    cycle_count,
    cycle_count_k,
    cycle_count_rec,
    cycle_hasse_edges,
    cycle_hasse_edges_closed,
    fibonacci,
    hfib,
    indices_to_subset,
    lucas,
    path_count,
    path_count_clamped,
    path_count_k,
    path_count_k_clamped,
    path_count_k_containing,
    path_count_rec,
    path_hasse_edges,
    path_hasse_edges_conv,
    subset_to_indices,
)
from .cubes import (
    PosetDiagram,
    avoiding_strings,
    diagram_as_graph,
    fibonacci_cube,
    fibonacci_strings,
    generalized_cube,
    hasse_diagram,
    lucas_cube,
    lucas_strings,
    power_patterns,
    same_labeled_graph,
)
from .graphs import (
    CapacityError,
    SimpleGraph,
    VertexSubset,
    contains_pattern,
    enumerate_independent,
    hamming,
    is_independent,
    power_cycle,
    power_path,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "HFibSequence",
    "PosetDiagram",
    "SimpleGraph",
    "VertexSubset",
    "avoiding_strings",
    "binom",
    "contains_pattern",
    "convolve_self",
    "cycle_count",
    "cycle_count_k",
    "cycle_count_rec",
    "cycle_hasse_edges",
    "cycle_hasse_edges_closed",
    "diagram_as_graph",
    "enumerate_independent",
    "fibonacci",
    "fibonacci_cube",
    "fibonacci_strings",
    "generalized_cube",
    "hamming",
    "hasse_diagram",
    "hfib",
    "indices_to_subset",
    "is_independent",
    "lucas",
    "lucas_cube",
    "lucas_strings",
    "path_count",
    "path_count_clamped",
    "path_count_k",
    "path_count_k_clamped",
    "path_count_k_containing",
    "path_count_rec",
    "path_hasse_edges",
    "path_hasse_edges_conv",
    "power_cycle",
    "power_path",
    "power_patterns",
    "same_labeled_graph",
    "subset_to_indices",
]
