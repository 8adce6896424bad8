"""Vertex-deletion sets into bipartite, bounded-degree and chordal graphs."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .decompositions import chordality_check, is_bipartite
from .graph import Graph, VertexSet, complement, induced_subgraph
from .solver import Answer, CliqueInstance, SolveBudget, has_clique


class TargetClass(enum.Enum):
    BIPARTITE = "bipartite"
    MAX_DEGREE = "max_degree"
    CHORDAL = "chordal"


class Method(enum.Enum):
    EXACT = "exact"
    APPROX = "approx"
    GREEDY = "greedy"


@dataclass(frozen=True)
class Modulator:
    vertices: VertexSet
    target_class: TargetClass
    method: Method
    max_degree: int | None = None  # the d of MAX_DEGREE

    def __len__(self):
        return len(self.vertices)


def residual(g: Graph, removed) -> tuple[Graph, dict[int, int]]:
    """G minus ``removed``, with the old-id -> new-id mapping of the survivors."""
    gone = set(removed)
    return induced_subgraph(g, [v for v in range(g.vertex_count) if v not in gone])


def certify(g: Graph, mod: Modulator) -> bool:
    """Re-check that G - X lies in the modulator's target class."""
    h, _ = residual(g, mod.vertices)
    if mod.target_class is TargetClass.BIPARTITE:
        return is_bipartite(h).is_bipartite
    if mod.target_class is TargetClass.MAX_DEGREE:
        return h.max_degree() <= mod.max_degree
    return chordality_check(h).is_chordal


# ---------------------------------------------------------------------------
# odd cycle transversal


class OctStatus(enum.Enum):
    FOUND = "found"
    NONE_WITHIN = "none_within"
    ABORT = "abort"


@dataclass(frozen=True)
class OctResult:
    status: OctStatus
    modulator: Modulator | None = None


class _Abort(Exception):
    pass


DEFAULT_OCT_NODE_CAP = 200_000


def oct_exact(g: Graph, budget: int, node_cap: int | None = DEFAULT_OCT_NODE_CAP) -> OctResult:
    """Minimum odd cycle transversal if it has at most ``budget`` vertices.

    Iterative deepening over the solution size; each size is tried by
    iterative compression. ``node_cap`` bounds the total number of
    compression branches and flow computations (None disables it).
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    counter = [0, node_cap]
    if _independence_lower_bound_exceeds(g, budget):
        return OctResult(OctStatus.NONE_WITHIN)
    try:
        for size in range(budget + 1):
            if _independence_lower_bound_exceeds(g, size):
                continue
            sol = _iterative_compression(g, size, counter)
            if sol is not None:
                mod = Modulator(VertexSet.of(sol, g.vertex_count), TargetClass.BIPARTITE, Method.EXACT)
                return OctResult(OctStatus.FOUND, mod)
    except _Abort:
        return OctResult(OctStatus.ABORT)
    return OctResult(OctStatus.NONE_WITHIN)


def _independence_lower_bound_exceeds(g: Graph, size: int) -> bool:
    """True if every OCT is larger than ``size`` because G has no large independent set.

    A bipartite induced subgraph is two independent sets, so OCT >= n - 2*alpha.
    Only a cheap, capped check: an inconclusive search returns False.
    """
    n = g.vertex_count
    need = (n - size + 1) // 2  # alpha must reach this for an OCT of `size` to exist
    if need <= 2 or n > 64:
        return False
    verdict = has_clique(CliqueInstance(complement(g), need), SolveBudget(5_000))
    return verdict is Answer.NO


def _tick(counter):
    counter[0] += 1
    if counter[1] is not None and counter[0] > counter[1]:
        raise _Abort


def _iterative_compression(g: Graph, size: int, counter) -> set[int] | None:
    """An OCT of at most ``size`` vertices, or None if none exists."""
    n = g.vertex_count
    sol: set[int] = set()
    present: list[int] = []
    for v in range(n):
        present.append(v)
        sol.add(v)
        if len(sol) <= size:
            continue
        sol = _compress(g, present, sol, size, counter)
        if sol is None:
            return None
    return sol


def _compress(g, present, z, size, counter):
    """Given an OCT ``z`` of G[present] with |z| = size + 1, find one of size <= size."""
    zl = sorted(z)
    pset = set(present)
    rest = [v for v in present if v not in z]
    # two-colouring of the bipartite graph G[rest]
    color = {}
    for s in rest:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y in pset and y not in z and y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
    sets = g.adj_sets
    assign: dict[int, int] = {}  # z-vertex -> 0/1 side, or -1 deleted

    def branch(i, deleted):
        _tick(counter)
        if deleted > size:
            return None
        if i == len(zl):
            return _complete(g, pset, rest, color, assign, size - deleted, counter)
        v = zl[i]
        for side in (0, 1):
            if all(assign.get(u) != side for u in sets[v] if u in assign):
                assign[v] = side
                found = branch(i + 1, deleted)
                del assign[v]
                if found is not None:
                    return found
        assign[v] = -1
        found = branch(i + 1, deleted + 1)
        del assign[v]
        return found

    found = branch(0, 0)
    return found


def _complete(g, pset, rest, color, assign, allowance, counter):
    """Extend a side assignment of z to a full 2-colouring by deleting <= allowance vertices of rest.

    Every vertex of ``rest`` either keeps its colour or flips; flips are
    constant on components of what remains, so forced-keep and forced-flip
    vertices must be separated by a vertex cut, computed as a max flow.
    """
    _tick(counter)
    keep, flip, both = set(), set(), set()
    for v in rest:
        want = set()
        for u in g.adjacency[v]:
            side = assign.get(u)
            if side is None or side == -1:
                continue
            want.add(1 - side)
        if len(want) == 2:
            both.add(v)
        elif want:
            (target,) = want
            (keep if target == color[v] else flip).add(v)
    if len(both) > allowance:
        return None
    cut = _min_vertex_cut(g, rest, both, keep, flip, allowance - len(both))
    if cut is None:
        return None
    return {v for v, s in assign.items() if s == -1} | both | cut


def _min_vertex_cut(g, rest, removed, sources, sinks, limit):
    """Smallest vertex set (terminals allowed) separating sources from sinks in G[rest - removed].

    Unit-capacity augmenting paths on the split graph; gives up (None) once
    the flow exceeds ``limit``.
    """
    alive = set(rest) - removed
    sources = sources - removed
    sinks = sinks - removed
    if not sources or not sinks:
        return set()
    # node (v, 0) = in-copy, (v, 1) = out-copy; capacity 1 on in->out
    cap: dict = {}

    def add(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    adj: dict = {}
    big = len(alive) + 1
    for v in alive:
        add((v, 0), (v, 1), 1)
        for u in g.adjacency[v]:
            if u in alive:
                add((v, 1), (u, 0), big)
    for v in sources:
        add("s", (v, 0), big)
    for v in sinks:
        add((v, 1), "t", big)
    for a, b in cap:
        adj.setdefault(a, []).append(b)

    flow = 0
    while True:
        prev = {"s": None}
        queue = deque(["s"])
        while queue and "t" not in prev:
            x = queue.popleft()
            for y in adj.get(x, ()):
                if y not in prev and cap[(x, y)] > 0:
                    prev[y] = x
                    queue.append(y)
        if "t" not in prev:
            break
        y = "t"
        while prev[y] is not None:
            x = prev[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
        flow += 1
        if flow > limit:
            return None
    reach = set(prev)
    return {v for v in alive if (v, 0) in reach and (v, 1) not in reach}


def oct_heuristic(g: Graph) -> Modulator:
    """Delete the highest-degree vertex of a found odd cycle until the graph is bipartite."""
    removed: list[int] = []
    while True:
        h, mapping = residual(g, removed)
        res = is_bipartite(h)
        if res.is_bipartite:
            break
        back = {new: old for old, new in mapping.items()}
        cycle = [back[x] for x in res.odd_cycle]
        removed.append(max(cycle, key=lambda v: (h.degree(mapping[v]), -v)))
    return Modulator(VertexSet.of(removed, g.vertex_count), TargetClass.BIPARTITE, Method.GREEDY)


# ---------------------------------------------------------------------------
# distance to bounded degree


def bounded_degree_modulator(g: Graph, d: int, p: int) -> Modulator | None:
    """Either a set X, |X| <= p(p+d+1), with max degree of G - X at most d, or None.

    None certifies that no such set of size at most ``p`` exists. Vertices of
    degree >= p+d+1 are forced into every solution; of the h forced ones, the
    remaining p-h solution vertices can each account for themselves plus at
    most p+d neighbours of degree > d.
    """
    if d < 0 or p < 0:
        raise ValueError("d and p must be non-negative")
    high = [v for v in range(g.vertex_count) if g.degree(v) >= p + d + 1]
    if len(high) > p:
        return None
    h, mapping = residual(g, high)
    back = {new: old for old, new in mapping.items()}
    heavy = [back[x] for x in range(h.vertex_count) if h.degree(x) > d]
    if len(heavy) > (p - len(high)) * (p + d + 1):
        return None
    return Modulator(VertexSet.of(high + heavy, g.vertex_count), TargetClass.MAX_DEGREE, Method.APPROX, max_degree=d)


# ---------------------------------------------------------------------------
# distance to chordal


def chordal_modulator_greedy(g: Graph) -> Modulator:
    """Hit induced cycles (length >= 4) at their highest-degree vertex until chordal."""
    removed: list[int] = []
    while True:
        h, mapping = residual(g, removed)
        res = chordality_check(h)
        if res.is_chordal:
            break
        back = {new: old for old, new in mapping.items()}
        cycle = [back[x] for x in res.induced_cycle]
        removed.append(max(cycle, key=lambda v: (h.degree(mapping[v]), -v)))
    return Modulator(VertexSet.of(removed, g.vertex_count), TargetClass.CHORDAL, Method.GREEDY)
