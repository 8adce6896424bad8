"""OR-kernels for k-Clique under structural parameters, with query batching."""

from .batching import batch_queries, equalize_k, trivial_or_compose
from .graph import (
    CliqueInstance,
    Graph,
    VertexSet,
    add_apexes,
    disjoint_union,
    encoding_size,
    induced_subgraph,
    parse_dimacs,
    parse_edge_list,
)
from .kernels import (
    QuerySet,
    kernel_bounded_degree,
    kernel_chordal,
    kernel_degeneracy,
    kernel_longest_odd_cycle,
    kernel_oct,
)
from .solver import Answer, SolveBudget, brute_force_has_clique, has_clique

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "CliqueInstance",
    "Graph",
    "QuerySet",
    "SolveBudget",
    "VertexSet",
    "add_apexes",
    "batch_queries",
    "brute_force_has_clique",
    "disjoint_union",
    "encoding_size",
    "equalize_k",
    "has_clique",
    "induced_subgraph",
    "kernel_bounded_degree",
    "kernel_chordal",
    "kernel_degeneracy",
    "kernel_longest_odd_cycle",
    "kernel_oct",
    "parse_dimacs",
    "parse_edge_list",
    "trivial_or_compose",
]
