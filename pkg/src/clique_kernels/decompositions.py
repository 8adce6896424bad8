"""Structural decompositions used by the kernels.

Degeneracy peeling, bipartiteness with odd-cycle certificates, block
(biconnected component) decomposition, Lex-BFS chordality testing with
induced-cycle certificates, and min-fill tree decompositions.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, VertexSet, induced_subgraph


# ---------------------------------------------------------------------------
# degeneracy


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: tuple[int, ...]
    degeneracy: int
    position: tuple[int, ...] = field(repr=False, compare=False)


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    """Repeatedly remove a minimum-degree vertex (smallest id on ties)."""
    n = g.vertex_count
    deg = [len(a) for a in g.adjacency]
    removed = [False] * n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    order: list[int] = []
    p = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        p = max(p, d)
        removed[v] = True
        order.append(v)
        for u in g.adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    return DegeneracyOrdering(tuple(order), p, tuple(position))


def later_closed_neighborhood(g: Graph, ordering: DegeneracyOrdering, v: int) -> VertexSet:
    pos = ordering.position
    return VertexSet.of([v, *(u for u in g.adjacency[v] if pos[u] > pos[v])], g.vertex_count)


# ---------------------------------------------------------------------------
# bipartiteness


@dataclass(frozen=True)
class BipartiteResult:
    is_bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None  # consecutive vertices, closing edge last->first

    def __bool__(self):
        return self.is_bipartite


def is_bipartite(g: Graph) -> BipartiteResult:
    n = g.vertex_count
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return BipartiteResult(False, odd_cycle=_tree_cycle(v, u, parent, depth))
    return BipartiteResult(True, coloring=tuple(color))


def _tree_cycle(a: int, b: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # a and b are joined by a non-tree edge; walk both up to their common ancestor
    left, right = [a], [b]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    right.pop()
    return tuple(left + right[::-1])


# ---------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[VertexSet, ...]
    cut_vertices: VertexSet


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via iterative Hopcroft-Tarjan DFS with an edge stack.

    Bridges come out as 2-vertex blocks and isolated vertices as 1-vertex blocks.
    """
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    timer = 0
    blocks: list[VertexSet] = []
    cuts: set[int] = set()

    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.adjacency[root]:
            disc[root] = timer
            timer += 1
            blocks.append(VertexSet((root,), n))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, par, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(g.adjacency[u])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if u != par and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if par == -1:
                continue
            low[par] = min(low[par], low[v])
            if low[v] >= disc[par]:
                members = set()
                while True:
                    a, b = edge_stack.pop()
                    members.add(a)
                    members.add(b)
                    if (a, b) == (par, v):
                        break
                blocks.append(VertexSet.of(members, n))
                if par != root:
                    cuts.add(par)
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(blocks), VertexSet.of(cuts, n))


def block_edges(g: Graph, block: VertexSet) -> list[tuple[int, int]]:
    """Edges of G with both ends in the block (for 2-connected blocks this is the block's edge set)."""
    members = block.as_set
    return [(u, v) for u in block for v in g.adjacency[u] if u < v and v in members]


# ---------------------------------------------------------------------------
# chordality


@dataclass(frozen=True)
class ChordalityResult:
    is_chordal: bool
    peo: tuple[int, ...] | None = None
    induced_cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.is_chordal


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS by partition refinement; ties go to the smallest id."""
    n = g.vertex_count
    if n == 0:
        return []
    parts: list[list[int]] = [list(range(n))]
    order: list[int] = []
    visited = [False] * n
    while parts:
        first = parts[0]
        v = first.pop(0)
        if not first:
            parts.pop(0)
        visited[v] = True
        order.append(v)
        nbrs = g.adj_sets[v]
        refined: list[list[int]] = []
        for part in parts:
            inside = [u for u in part if u in nbrs]
            outside = [u for u in part if u not in nbrs]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        parts = refined
    return order


def peo_violation(g: Graph, order: Sequence[int]) -> tuple[int, int, int] | None:
    """First (v, u, w) with u, w later neighbours of v that are not adjacent, else None.

    Uses the parent test: later(v) minus its earliest member must lie in
    that member's neighbourhood.
    """
    pos = {v: i for i, v in enumerate(order)}
    sets = g.adj_sets
    for v in order:
        later = [u for u in g.adjacency[v] if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        for w in later:
            if w != parent and w not in sets[parent]:
                return v, parent, w
    return None


def chordality_check(g: Graph) -> ChordalityResult:
    order = lex_bfs(g)
    peo = order[::-1]
    violation = peo_violation(g, peo)
    if violation is None:
        return ChordalityResult(True, peo=tuple(peo))
    v, u, w = violation
    cycle = _cycle_through(g, v, u, w)
    if cycle is None:
        cycle = _any_induced_cycle(g)
    return ChordalityResult(False, induced_cycle=cycle)


def _cycle_through(g: Graph, v: int, u: int, w: int) -> tuple[int, ...] | None:
    """Induced cycle v-u-...-w-v using a shortest u-w path that avoids N[v] except u, w."""
    blocked = set(g.adjacency[v]) | {v}
    blocked.discard(u)
    blocked.discard(w)
    prev = {u: -1}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            break
        for y in g.adjacency[x]:
            if y not in prev and y not in blocked:
                # w is never an intermediate vertex: only enter it as the target
                prev[y] = x
                queue.append(y)
    if w not in prev:
        return None
    path = [w]
    while path[-1] != u:
        path.append(prev[path[-1]])
    return (v, *path[::-1])


def _any_induced_cycle(g: Graph) -> tuple[int, ...]:
    # Every chordless cycle C has a vertex v whose C-neighbours u, w are non-adjacent
    # and joined by the rest of C outside N[v]; so this search always succeeds on
    # non-chordal graphs.
    for v in range(g.vertex_count):
        nbrs = g.adjacency[v]
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1 :]:
                if not g.has_edge(u, w):
                    cycle = _cycle_through(g, v, u, w)
                    if cycle is not None:
                        return cycle
    raise AssertionError("graph has no induced cycle of length >= 4")


def is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff ``cycle`` lists distinct vertices forming a chordless cycle of length >= 4."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


# ---------------------------------------------------------------------------
# tree decompositions


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[VertexSet, ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def to_pace(self) -> str:
        """PACE .td text: ``s td`` header, 1-based ``b`` lines, then 1-based tree edges."""
        n = self.bags[0].host_vertex_count if self.bags else 0
        lines = [f"s td {len(self.bags)} {self.width + 1} {n}"]
        for i, bag in enumerate(self.bags, 1):
            lines.append(" ".join(["b", str(i), *(str(v + 1) for v in bag)]))
        lines.extend(f"{a + 1} {b + 1}" for a, b in self.tree_edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_pace(cls, text: str) -> "TreeDecomposition":
        n = None
        bags: dict[int, list[int]] = {}
        edges = []
        for raw in text.splitlines():
            parts = raw.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "s":
                n = int(parts[4])
            elif parts[0] == "b":
                bags[int(parts[1])] = [int(x) - 1 for x in parts[2:]]
            else:
                edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
        if n is None:
            raise ValueError("missing 's td' line")
        ordered = [VertexSet.of(bags[i], n) for i in sorted(bags)]
        return cls(tuple(ordered), tuple(edges))


@dataclass(frozen=True)
class Violation:
    condition: str  # "vertex", "edge", "subtree", "tree" or "host"
    description: str

    def __bool__(self):
        return False


def validate_tree_decomposition(td: TreeDecomposition, g: Graph) -> Violation | None:
    """None if ``td`` is a valid tree decomposition of ``g``, else the first violation found."""
    nb = len(td.bags)
    for bag in td.bags:
        if bag.host_vertex_count != g.vertex_count:
            return Violation("host", "bag belongs to a different host graph")
    # tree-ness
    if nb == 0:
        if td.tree_edges:
            return Violation("tree", "tree edges without bags")
    else:
        if len(td.tree_edges) != nb - 1:
            return Violation("tree", f"{len(td.tree_edges)} tree edges for {nb} bags")
        adj: list[list[int]] = [[] for _ in range(nb)]
        for a, b in td.tree_edges:
            if not (0 <= a < nb and 0 <= b < nb) or a == b:
                return Violation("tree", f"bad tree edge ({a}, {b})")
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != nb:
            return Violation("tree", "tree edges contain a cycle or leave bags disconnected")

    holders: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for i, bag in enumerate(td.bags):
        for v in bag:
            holders[v].append(i)
    for v in range(g.vertex_count):
        if not holders[v]:
            return Violation("vertex", f"vertex {v} is in no bag")
    for u, v in g.edges():
        if not any(v in td.bags[i] for i in holders[u]):
            return Violation("edge", f"edge ({u}, {v}) is in no bag")
    if nb:
        for v in range(g.vertex_count):
            own = set(holders[v])
            start = holders[v][0]
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y in own and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(own):
                return Violation("subtree", f"bags containing vertex {v} are not connected")
    return None


def min_fill_ordering(g: Graph) -> list[int]:
    """Greedy elimination order: fewest fill edges, then smaller degree, then smaller id."""
    nbrs = [set(a) for a in g.adjacency]
    alive = set(range(g.vertex_count))
    order = []
    while alive:
        best = None
        for v in sorted(alive):
            ns = list(nbrs[v])
            fill = 0
            for i, a in enumerate(ns):
                na = nbrs[a]
                for b in ns[i + 1 :]:
                    if b not in na:
                        fill += 1
            key = (fill, len(ns), v)
            if best is None or key < best:
                best = key
        v = best[2]
        order.append(v)
        ns = nbrs[v]
        for a in ns:
            nbrs[a] |= ns
            nbrs[a].discard(a)
            nbrs[a].discard(v)
        nbrs[v] = set()
        alive.discard(v)
    return order


def elimination_tree_decomposition(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Tree decomposition induced by an elimination ordering; one bag per vertex."""
    n = g.vertex_count
    if n == 0:
        return TreeDecomposition((), ())
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    nbrs = [set(a) for a in g.adjacency]
    bags: list[VertexSet] = []
    later_sets = []
    for v in order:
        later = {u for u in nbrs[v] if pos[u] > pos[v]}
        later_sets.append(later)
        bags.append(VertexSet.of(later | {v}, n))
        for a in later:
            nbrs[a] |= later
            nbrs[a].discard(a)
    edges = []
    roots = []
    for i, later in enumerate(later_sets):
        if later:
            parent = min(pos[u] for u in later)
            edges.append((i, parent))
        else:
            roots.append(i)
    # one root per connected component; chain them so the bags form a single tree
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return TreeDecomposition(tuple(bags), tuple(edges))


def heuristic_tree_decomposition(g: Graph) -> TreeDecomposition:
    return elimination_tree_decomposition(g, min_fill_ordering(g))


def reduce_bag_count(td: TreeDecomposition, g: Graph) -> TreeDecomposition:
    """Contract tree edges whose bags are nested until none remain.

    The result keeps the width and validity and has at most max(n_G, 1) bags.
    """
    violation = validate_tree_decomposition(td, g)
    if violation is not None:
        raise ValueError(f"invalid tree decomposition: {violation.description}")
    bags = {i: b.as_set for i, b in enumerate(td.bags)}
    adj: dict[int, set[int]] = {i: set() for i in bags}
    for a, b in td.tree_edges:
        adj[a].add(b)
        adj[b].add(a)
    changed = True
    while changed:
        changed = False
        for a in sorted(bags):
            for b in sorted(adj[a]):
                if bags[b] <= bags[a]:
                    keep, drop = a, b
                elif bags[a] <= bags[b]:
                    keep, drop = b, a
                else:
                    continue
                for c in adj.pop(drop):
                    adj[c].discard(drop)
                    if c != keep:
                        adj[c].add(keep)
                        adj[keep].add(c)
                del bags[drop]
                changed = True
                break
            if changed:
                break
    ids = sorted(bags)
    index = {old: new for new, old in enumerate(ids)}
    n = g.vertex_count
    new_bags = tuple(VertexSet.of(bags[i], n) for i in ids)
    new_edges = tuple(sorted({(index[a], index[b]) for a in ids for b in adj[a] if a < b}))
    return TreeDecomposition(new_bags, new_edges)


def bag_subgraph(g: Graph, bag: VertexSet) -> Graph:
    return induced_subgraph(g, bag)[0]
