"""Simple undirected graphs with dense 0-based vertex ids.

Graphs are immutable; every surgery (induced subgraph, disjoint union,
apex addition) returns a new graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphParseError(ValueError):
    """Malformed input text. ``line`` is 1-based, or None if not line-specific."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(ValueError):
    """Input is well-formed but violates a graph invariant (self-loop, duplicate edge)."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise GraphValidationError("adjacency length differs from vertex_count")
        total = 0
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if u <= prev:
                    raise GraphValidationError(f"adjacency of {v} not strictly increasing")
                if u == v:
                    raise GraphValidationError(f"self-loop at {v}")
                if not 0 <= u < self.vertex_count:
                    raise GraphValidationError(f"neighbor {u} of {v} out of range")
                prev = u
            total += len(nbrs)
        sets = self.adj_sets
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in sets[u]:
                    raise GraphValidationError(f"asymmetric adjacency {v}-{u}")
        object.__setattr__(self, "edge_count", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph; self-loops and repeated edges raise GraphValidationError."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) out of range for {n} vertices")
            if v in nbrs[u]:
                raise GraphValidationError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return self.edge_count

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True)
class VertexSet:
    members: tuple[int, ...]
    host_vertex_count: int

    def __post_init__(self):
        prev = -1
        for v in self.members:
            if v <= prev:
                raise ValueError("VertexSet members must be strictly increasing")
            if v >= self.host_vertex_count:
                raise ValueError(f"vertex {v} out of range for host with {self.host_vertex_count} vertices")
            prev = v

    @classmethod
    def of(cls, vertices: Iterable[int], host_vertex_count: int) -> "VertexSet":
        members = tuple(sorted(set(vertices)))
        if members and members[0] < 0:
            raise ValueError(f"negative vertex id {members[0]}")
        return cls(members, host_vertex_count)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v):
        return v in self.as_set

    @cached_property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


@dataclass(frozen=True)
class CliqueInstance:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")


def encoding_size(g: Graph) -> int:
    """n_G + m_G * ceil(log2(max(n_G, 2))), the size measure used for batching."""
    return g.vertex_count + g.edge_count * math.ceil(math.log2(max(g.vertex_count, 2)))


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``, relabeled 0..|s|-1 in sorted order.

    Returns the graph and the old-id -> new-id mapping.
    """
    if not isinstance(s, VertexSet):
        s = VertexSet.of(s, g.vertex_count)
    elif s.host_vertex_count != g.vertex_count:
        raise ValueError("vertex set belongs to a different host graph")
    mapping = {old: new for new, old in enumerate(s.members)}
    adj = tuple(
        tuple(mapping[u] for u in g.adjacency[old] if u in mapping) for old in s.members
    )
    return Graph(len(s.members), adj), mapping


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    adj: list[tuple[int, ...]] = []
    offset = 0
    for g in gs:
        adj.extend(tuple(u + offset for u in nbrs) for nbrs in g.adjacency)
        offset += g.vertex_count
    return Graph(offset, tuple(adj))


def add_apexes(g: Graph, count: int) -> Graph:
    """Append ``count`` vertices adjacent to everything (including each other)."""
    if count < 0:
        raise ValueError("apex count must be non-negative")
    if count == 0:
        return g
    n = g.vertex_count
    total = n + count
    apexes = tuple(range(n, total))
    adj = [nbrs + apexes for nbrs in g.adjacency]
    for a in apexes:
        adj.append(tuple(u for u in range(total) if u != a))
    return Graph(total, tuple(adj))


def complement(g: Graph) -> Graph:
    n = g.vertex_count
    sets = g.adj_sets
    return Graph(n, tuple(tuple(u for u in range(n) if u != v and u not in sets[v]) for v in range(n)))


# ---------------------------------------------------------------------------
# text formats


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional leading ``n m`` header.

    A first line ``a b`` is read as a header when exactly ``b`` lines follow
    and every later id is below ``a``. The writer always emits the header,
    so ambiguous inputs resolve in its favor and round trips are exact.
    """
    lines = list(_content_lines(text))
    edges: list[tuple[int, int]] = []
    declared_n = declared_m = None
    for idx, (lineno, line) in enumerate(lines):
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno)
        a, b = _ints(tokens, lineno)
        if a < 0 or b < 0:
            raise GraphParseError("negative vertex id", lineno)
        if idx == 0 and _looks_like_header(a, b, lines[1:]):
            declared_n, declared_m = a, b
            continue
        edges.append((a, b))
    max_id = max((max(e) for e in edges), default=-1)
    if declared_n is not None:
        if max_id >= declared_n:
            raise GraphParseError(f"vertex id {max_id} exceeds declared count {declared_n}")
        if declared_m != len(edges):
            raise GraphParseError(f"header declares {declared_m} edges, found {len(edges)}")
        n = declared_n
    else:
        n = max_id + 1
    return Graph.from_edges(n, edges)


def _looks_like_header(a: int, b: int, rest) -> bool:
    if a == b:
        # "n n" can never be an edge; a lone "0 0" is a self-loop, not an empty header
        return bool(rest)
    if b != len(rest):
        return False
    max_id = -1
    for _, line in rest:
        tokens = line.split()
        if len(tokens) == 2 and all(t.lstrip("-").isdigit() for t in tokens):
            max_id = max(max_id, int(tokens[0]), int(tokens[1]))
    return max_id < a


def parse_dimacs(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate 'p' line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphParseError(f"malformed problem line {line!r}", lineno)
            n, m = _ints(tokens[2:], lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphParseError("edge before 'p' line", lineno)
            if len(tokens) != 3:
                raise GraphParseError(f"malformed edge line {line!r}", lineno)
            u, v = _ints(tokens[1:], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphParseError(f"vertex id {x} out of range 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p' line")
    if m != len(edges):
        raise GraphParseError(f"'p' line declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    if g.vertex_count == 0:
        return ""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.vertex_count} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    """Read a graph file; DIMACS if the name ends in .col/.dimacs/.clq or a 'p' line is present."""
    from pathlib import Path

    path = Path(path)
    text = path.read_text()
    if path.suffix in (".col", ".dimacs", ".clq") or any(
        ln.lstrip().startswith("p ") for ln in text.splitlines()[:50]
    ):
        return parse_dimacs(text)
    return parse_edge_list(text)
