"""Exact spanning-tree counting for complete and complete bipartite graphs.

Closed-form counters (total, degree-constrained, and all-degrees-odd) with
independent brute-force oracles and a CLI for counting, verification
sweeps, table generation, and benchmarks.
"""

from .combinatorics import (
    Count,
    InexactDivisionError,
    SignedSum,
    SizeLimitError,
    binomial,
    even_compositions,
    exact_div,
    factorial,
    int_pow,
    multinomial,
    positive_compositions,
)
from .formulas import (
    Complete,
    CompleteBipartite,
    GraphFamily,
    odd_spanning_trees_bipartite,
    odd_spanning_trees_bipartite_by_sum,
    odd_spanning_trees_complete,
    odd_spanning_trees_complete_by_sum,
    odd_tree_count,
    spanning_trees_bipartite,
    spanning_trees_complete,
    tree_count,
    trees_with_degrees_bipartite,
    trees_with_degrees_complete,
)
from .oracles import (
    BRUTE_FORCE_LIMIT,
    LabeledGraph,
    Tree,
    count_trees_bipartite_brute,
    count_trees_complete_brute,
    degrees_from_pruefer,
    matrix_tree_count,
    pruefer_decode,
)
from .signsum import (
    HYPERCUBE_LIMIT,
    binomial_power_sum,
    hypercube_power_sum,
    multinomial_power_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "Complete",
    "CompleteBipartite",
    "Count",
    "GraphFamily",
    "HYPERCUBE_LIMIT",
    "InexactDivisionError",
    "LabeledGraph",
    "SignedSum",
    "SizeLimitError",
    "Tree",
    "binomial",
    "binomial_power_sum",
    "count_trees_bipartite_brute",
    "count_trees_complete_brute",
    "degrees_from_pruefer",
    "even_compositions",
    "exact_div",
    "factorial",
    "hypercube_power_sum",
    "int_pow",
    "matrix_tree_count",
    "multinomial",
    "multinomial_power_sum",
    "odd_spanning_trees_bipartite",
    "odd_spanning_trees_bipartite_by_sum",
    "odd_spanning_trees_complete",
    "odd_spanning_trees_complete_by_sum",
    "odd_tree_count",
    "positive_compositions",
    "pruefer_decode",
    "spanning_trees_bipartite",
    "spanning_trees_complete",
    "tree_count",
    "trees_with_degrees_bipartite",
    "trees_with_degrees_complete",
]
