"""Seeded random and structured graph families for test corpora."""

from __future__ import annotations

import itertools
import random

from .graph import Graph

FAMILIES = ("gnp", "bipartite-plus-edges", "bounded-degree", "planted-clique", "cycle", "complete")


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def bipartite_plus_edges(n: int, p: float = 0.3, extra: int = 2, seed: int = 0) -> Graph:
    """Random bipartite graph on a random split, plus ``extra`` edges inside the sides."""
    rng = random.Random(seed)
    side = [rng.random() < 0.5 for _ in range(n)]
    edges = set()
    for u, v in itertools.combinations(range(n), 2):
        if side[u] != side[v] and rng.random() < p:
            edges.add((u, v))
    same = [(u, v) for u, v in itertools.combinations(range(n), 2) if side[u] == side[v]]
    rng.shuffle(same)
    edges.update(same[:extra])
    return Graph.from_edges(n, sorted(edges))


def bounded_degree(n: int, d: int = 3, seed: int = 0) -> Graph:
    """Random graph with maximum degree at most ``d``: shuffled pairs added while both ends have room."""
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < d and deg[v] < d:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph.from_edges(n, edges)


def planted_clique(n: int, k: int, p: float = 0.2, seed: int = 0) -> tuple[Graph, list[int]]:
    """G(n, p) with a k-clique planted on random vertices; returns the graph and the clique."""
    if k > n:
        raise ValueError("planted clique larger than the graph")
    rng = random.Random(seed)
    members = sorted(rng.sample(range(n), k))
    inside = set(members)
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if (u in inside and v in inside) or rng.random() < p
    ]
    return Graph.from_edges(n, edges), members


def generate(family: str, size: int, seed: int = 0, **params) -> tuple[Graph, dict]:
    """Dispatch by family name; returns the graph and metadata for a corpus manifest."""
    meta: dict = {"family": family, "size": size, "seed": seed}
    if family == "gnp":
        p = params.get("p", 0.3)
        meta["p"] = p
        return gnp(size, p, seed), meta
    if family == "bipartite-plus-edges":
        p, extra = params.get("p", 0.3), params.get("extra", 2)
        meta.update(p=p, extra=extra)
        return bipartite_plus_edges(size, p, extra, seed), meta
    if family == "bounded-degree":
        d = params.get("d", 3)
        meta["d"] = d
        return bounded_degree(size, d, seed), meta
    if family == "planted-clique":
        k, p = params.get("k", 4), params.get("p", 0.2)
        g, members = planted_clique(size, k, p, seed)
        meta.update(k=k, p=p, planted=members, expected="yes")
        return g, meta
    if family == "cycle":
        return cycle(size), meta
    if family == "complete":
        return complete(size), meta
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
