"""Trivial OR composition and log-factor query batching."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graph import CliqueInstance, VertexSet, add_apexes, disjoint_union
from .kernels import Query, QuerySet


def equalize_k(queries: Sequence[CliqueInstance]) -> tuple[list[CliqueInstance], int]:
    """Raise every instance to the largest k by adding k* - k_i apex vertices."""
    if not queries:
        raise ValueError("equalize_k needs at least one instance")
    k_star = max(q.k for q in queries)
    out = [q if q.k == k_star else CliqueInstance(add_apexes(q.graph, k_star - q.k), k_star) for q in queries]
    return out, k_star


def trivial_or_compose(queries: Sequence[CliqueInstance]) -> CliqueInstance:
    """Disjoint union after k-equalisation; Yes iff some input is Yes."""
    equalized, k_star = equalize_k(queries)
    if len(equalized) == 1:
        return equalized[0]
    return CliqueInstance(disjoint_union([q.graph for q in equalized]), k_star)


def group_size(c: int, n: int) -> int:
    """max(1, ceil(log2(n) ** c))."""
    if c < 0:
        raise ValueError("c must be non-negative")
    if n < 2:
        raise ValueError("encoding size n must be at least 2")
    return max(1, math.ceil(math.log2(n) ** c))


@dataclass(frozen=True)
class BatchPlan:
    group_size: int
    groups: tuple[tuple[int, ...], ...]
    c: int
    n: int


def plan_batches(q: int, c: int, n: int) -> BatchPlan:
    g = group_size(c, n)
    groups = tuple(tuple(range(start, min(start + g, q))) for start in range(0, q, g))
    return BatchPlan(g, groups, c, n)


def batch_queries(qs: QuerySet, c: int, n: int) -> QuerySet:
    """Compose consecutive runs of ceil(log2(n)^c) queries into one query each."""
    plan = plan_batches(len(qs.queries), c, n)
    if plan.group_size == 1 or qs.immediate_answer is not None:
        return qs
    batched = []
    for gi, group in enumerate(plan.groups):
        members = [qs.queries[i] for i in group]
        composed = trivial_or_compose([m.instance for m in members])
        host = members[0].vertices.host_vertex_count
        # the composed graph is no longer induced in the input; record the union of preimages
        covered = VertexSet.of((v for m in members for v in m.vertices), host)
        batched.append(Query(composed, covered, f"batch {gi}: queries {group[0]}..{group[-1]}"))
    info = dict(qs.info, batch_group_size=plan.group_size, batch_c=c, raw_query_count=len(qs.queries))
    return QuerySet(tuple(batched), qs.parameter_name, qs.parameter_value, None, qs.modulator_size, info)
