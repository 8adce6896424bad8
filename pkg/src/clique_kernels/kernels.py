"""OR-kernels for k-Clique under five structural parameters.

Each generator maps a CliqueInstance to a QuerySet: the instance is a Yes
instance exactly when ``immediate_answer`` is YES or some query is a Yes
instance. Every query graph is an induced subgraph of the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .decompositions import (
    block_decomposition,
    chordality_check,
    degeneracy_ordering,
    heuristic_tree_decomposition,
    is_bipartite,
    later_closed_neighborhood,
    reduce_bag_count,
)
from .graph import CliqueInstance, Graph, VertexSet, encoding_size, induced_subgraph
from .modulators import (
    OctStatus,
    bounded_degree_modulator,
    chordal_modulator_greedy,
    oct_exact,
    oct_heuristic,
    residual,
)
from .solver import Answer, has_clique


@dataclass(frozen=True)
class Query:
    instance: CliqueInstance
    vertices: VertexSet  # preimage of the query graph's vertices in the input graph
    note: str


@dataclass(frozen=True)
class QuerySet:
    queries: tuple[Query, ...]
    parameter_name: str
    parameter_value: int
    immediate_answer: Answer | None = None
    modulator_size: int | None = None
    info: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.immediate_answer is not None and self.queries:
            raise ValueError("a QuerySet with an immediate answer carries no queries")

    def __len__(self):
        return len(self.queries)

    @property
    def instances(self) -> list[CliqueInstance]:
        return [q.instance for q in self.queries]

    def resolve(self, solve) -> Answer:
        """OR over the queries, each decided by ``solve(instance) -> Answer``."""
        if self.immediate_answer is not None:
            return self.immediate_answer
        return Answer.of(any(solve(q.instance) is Answer.YES for q in self.queries))


def _query(g: Graph, vertices, k: int, note: str) -> Query:
    vs = vertices if isinstance(vertices, VertexSet) else VertexSet.of(vertices, g.vertex_count)
    sub, _ = induced_subgraph(g, vs)
    return Query(CliqueInstance(sub, k), vs, note)


def kernel_degeneracy(inst: CliqueInstance) -> QuerySet:
    """One query per vertex: its closed neighbourhood among later vertices of the degeneracy order."""
    g, k = inst.graph, inst.k
    ordering = degeneracy_ordering(g)
    queries = tuple(
        _query(g, later_closed_neighborhood(g, ordering, v), k, f"vertex {v}") for v in ordering.order
    )
    return QuerySet(queries, "degeneracy", ordering.degeneracy)


def oct_budget(g: Graph) -> int:
    return math.ceil(math.log2(max(encoding_size(g), 2)))


def kernel_oct(inst: CliqueInstance, exact_budget: int | None = None) -> QuerySet:
    """Solve outright when a small odd cycle transversal exists, else query G[e + X] per edge of G - X.

    ``exact_budget`` defaults to ceil(log2 n) for the encoding size n; a
    negative value skips the exact search.
    """
    g = inst.graph
    budget = oct_budget(g) if exact_budget is None else exact_budget
    status = None
    if budget >= 0:
        exact = oct_exact(g, budget)
        status = exact.status.value
        if exact.status is OctStatus.FOUND:
            size = len(exact.modulator)
            return QuerySet((), "oct", size, immediate_answer=has_clique(inst), modulator_size=size,
                            info={"oct_method": "exact"})
    x = oct_heuristic(g)
    return oct_queries(inst, x.vertices, info={"oct_method": "greedy", "exact_status": status})


def oct_queries(inst: CliqueInstance, x, info: dict | None = None) -> QuerySet:
    """Queries for a given bipartite modulator X: one per edge of G - X, one per isolated vertex of G - X."""
    g, k = inst.graph, inst.k
    xs = list(x)
    h, mapping = residual(g, xs)
    back = {new: old for old, new in mapping.items()}
    queries = []
    for a, b in h.edges():
        u, v = back[a], back[b]
        queries.append(_query(g, [u, v, *xs], k, f"edge {u}-{v}"))
    for a in range(h.vertex_count):
        if h.degree(a) == 0:
            u = back[a]
            queries.append(_query(g, [u, *xs], k, f"isolated {u}"))
    return QuerySet(tuple(queries), "oct", len(xs), modulator_size=len(xs), info=info or {})


def kernel_bounded_degree(inst: CliqueInstance, d: int) -> QuerySet:
    """Queries G[X + N_H[v]] for a modulator X found by iterative deepening on its size bound."""
    g, k = inst.graph, inst.k
    p = 0
    while True:
        x = bounded_degree_modulator(g, d, p)
        if x is not None:
            break
        p += 1
    xs = list(x.vertices)
    h, mapping = residual(g, xs)
    back = {new: old for old, new in mapping.items()}
    queries = []
    for a in range(h.vertex_count):
        closed = [back[a], *(back[b] for b in h.adjacency[a])]
        queries.append(_query(g, closed + xs, k, f"vertex {back[a]}"))
    if h.vertex_count == 0:
        queries.append(_query(g, xs, k, "modulator"))
    return QuerySet(tuple(queries), f"distance_to_degree_{d}", len(xs), modulator_size=len(xs),
                    info={"d": d, "p_bound": p})


def kernel_chordal(inst: CliqueInstance) -> QuerySet:
    g, k = inst.graph, inst.k
    if g.vertex_count == 0:
        return QuerySet((), "distance_to_chordal", 0, immediate_answer=Answer.NO, modulator_size=0)
    x = chordal_modulator_greedy(g)
    xs = list(x.vertices)
    h, mapping = residual(g, xs)
    back = {new: old for old, new in mapping.items()}
    peo = chordality_check(h).peo
    pos = {v: i for i, v in enumerate(peo)}
    queries = []
    for a in peo:
        later = [b for b in h.adjacency[a] if pos[b] > pos[a]]
        if len(later) + 1 >= k:
            # a together with its later neighbours is already a k-clique of H
            return QuerySet((), "distance_to_chordal", len(xs), immediate_answer=Answer.YES,
                            modulator_size=len(xs), info={"witness_vertex": back[a]})
        closed = [back[a], *(back[b] for b in later)]
        queries.append(_query(g, closed + xs, k, f"vertex {back[a]}"))
    if h.vertex_count == 0:
        queries.append(_query(g, xs, k, "modulator"))
    return QuerySet(tuple(queries), "distance_to_chordal", len(xs), modulator_size=len(xs))


def kernel_longest_odd_cycle(inst: CliqueInstance) -> QuerySet:
    """One query per bag of a tree decomposition of each non-bipartite block."""
    g, k = inst.graph, inst.k
    if k == 1:
        return QuerySet((), "longest_odd_cycle", 0, immediate_answer=Answer.of(g.vertex_count >= 1))
    if k == 2:
        return QuerySet((), "longest_odd_cycle", 0, immediate_answer=Answer.of(g.edge_count >= 1))
    blocks = block_decomposition(g)
    queries = []
    max_bag = 0
    for bi, block in enumerate(blocks.blocks):
        sub, mapping = induced_subgraph(g, block)
        if is_bipartite(sub).is_bipartite:
            continue
        back = {new: old for old, new in mapping.items()}
        td = reduce_bag_count(heuristic_tree_decomposition(sub), sub)
        for j, bag in enumerate(td.bags):
            max_bag = max(max_bag, len(bag))
            queries.append(_query(g, [back[v] for v in bag], k, f"block {bi} bag {j}"))
    if not queries:
        return QuerySet((), "longest_odd_cycle", 0, immediate_answer=Answer.NO)
    return QuerySet(tuple(queries), "longest_odd_cycle", max_bag)


KERNELS = {
    "degeneracy": kernel_degeneracy,
    "oct": kernel_oct,
    "dbd": kernel_bounded_degree,
    "chordal": kernel_chordal,
    "loc": kernel_longest_odd_cycle,
}


def run_kernel(name: str, inst: CliqueInstance, d: int = 2) -> QuerySet:
    if name not in KERNELS:
        raise KeyError(f"unknown kernel {name!r}; choose from {sorted(KERNELS)}")
    if name == "dbd":
        return kernel_bounded_degree(inst, d)
    return KERNELS[name](inst)
