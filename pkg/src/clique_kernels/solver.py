"""Exact k-clique decision.

``has_clique`` is the production search: vertices in degeneracy order, each
one seeding a bitset branch-and-bound over its later neighbourhood with a
greedy-colouring bound. ``brute_force_has_clique`` is a deliberately naive
oracle that shares nothing with it beyond the Graph type.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import CliqueInstance, Graph


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    BUDGET_EXCEEDED = "budget_exceeded"

    def __bool__(self):
        if self is Answer.BUDGET_EXCEEDED:
            raise ValueError("BUDGET_EXCEEDED has no truth value")
        return self is Answer.YES

    @classmethod
    def of(cls, flag: bool) -> "Answer":
        return cls.YES if flag else cls.NO


@dataclass(frozen=True)
class SolveBudget:
    node_limit: int | None = None  # None means unlimited

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be >= 1")


UNLIMITED = SolveBudget()


class _BudgetHit(Exception):
    pass


def _peel_order(g: Graph) -> list[int]:
    # Minimum-degree peeling with smallest-id tie-break; kept local so the
    # solver has no dependency on the decompositions module.
    import heapq

    deg = [len(a) for a in g.adjacency]
    removed = [False] * g.vertex_count
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        for u in g.adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order


def _color_bound(cand: int, masks: list[int]) -> int:
    """Number of colours in a greedy colouring of the candidate set (upper bound on its clique size)."""
    colors = 0
    rest = cand
    while rest:
        colors += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            rest &= ~low
            avail &= ~masks[v] & ~low
    return colors


def has_clique(inst: CliqueInstance, budget: SolveBudget = UNLIMITED) -> Answer:
    g, k = inst.graph, inst.k
    n = g.vertex_count
    if k > n:
        return Answer.NO
    if k == 1:
        return Answer.YES
    if k == 2:
        return Answer.of(g.edge_count > 0)
    if g.edge_count < k * (k - 1) // 2:
        return Answer.NO

    order = _peel_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # relabel so that bit i is the i-th vertex of the degeneracy order
    masks = [0] * n
    for v in range(n):
        m = 0
        for u in g.adjacency[v]:
            m |= 1 << pos[u]
        masks[pos[v]] = m

    limit = budget.node_limit
    nodes = 0

    def extend(cand: int, need: int) -> bool:
        nonlocal nodes
        nodes += 1
        if limit is not None and nodes > limit:
            raise _BudgetHit
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        if need == 1:
            return True
        if _color_bound(cand, masks) < need:
            return False
        while cand:
            if cand.bit_count() < need:
                return False
            low = cand & -cand
            v = low.bit_length() - 1
            cand &= ~low
            if extend(cand & masks[v], need - 1):
                return True
        return False

    try:
        for i in range(n):
            later = masks[i] >> (i + 1) << (i + 1)
            if later.bit_count() + 1 < k:
                continue
            if extend(later, k - 1):
                return Answer.YES
    except _BudgetHit:
        return Answer.BUDGET_EXCEEDED
    return Answer.NO


def brute_force_has_clique(inst: CliqueInstance) -> Answer:
    """Exhaustive search: from each vertex, try every subset of its higher-id neighbours."""
    g, k = inst.graph, inst.k
    adj = [set(a) for a in g.adjacency]

    def grow(size: int, common: list[int]) -> bool:
        if size == k:
            return True
        for i, v in enumerate(common):
            nxt = [u for u in common[i + 1 :] if u in adj[v]]
            if grow(size + 1, nxt):
                return True
        return False

    for v in range(g.vertex_count):
        if grow(1, [u for u in g.adjacency[v] if u > v]):
            return Answer.YES
    return Answer.NO
