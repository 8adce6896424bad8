"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line (shown in the terminal summary) and then
asserts. Tolerances are zero violations throughout; the time limits are the
stated runtime budgets.
"""

import random
import time

import pytest

from clique_kernels import generators as gen
from clique_kernels.batching import batch_queries, group_size
from clique_kernels.cli import main
from clique_kernels.decompositions import (
    block_decomposition,
    block_edges,
    chordality_check,
    degeneracy_ordering,
    heuristic_tree_decomposition,
    reduce_bag_count,
    validate_tree_decomposition,
)
from clique_kernels.graph import CliqueInstance, Graph, encoding_size, induced_subgraph
from clique_kernels.kernels import kernel_longest_odd_cycle, kernel_chordal, kernel_oct, run_kernel
from clique_kernels.modulators import (
    OctStatus,
    bounded_degree_modulator,
    certify,
    chordal_modulator_greedy,
    oct_exact,
    oct_heuristic,
)
from clique_kernels.pipeline import InvariantViolation, check_bounds
from clique_kernels.solver import Answer, brute_force_has_clique, has_clique
from oracles import (
    exhaustive_degeneracy,
    has_long_induced_cycle,
    max_clique_size,
    min_degree_modulator,
    min_oct,
    small_connected_graphs,
)
from suite import ACCEPTANCE_LINES, suite_instances

KERNEL_NAMES = ("degeneracy", "oct", "dbd", "chordal", "loc")
SUITE_SIZE = 420


def record(number: int, title: str, violations: list, detail: str = ""):
    status = "PASS" if not violations else "FAIL"
    line = f"{status} criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    if violations:
        line += f"; {len(violations)} violations, first: {violations[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not violations, line


@pytest.fixture(scope="module")
def suite():
    return suite_instances(SUITE_SIZE)


@pytest.fixture(scope="module")
def kernelized(suite):
    """(family, instance, kernel label, QuerySet) for every suite instance and kernel.

    The OCT kernel appears twice: with its exact small-parameter branch and
    with the exact search disabled, so the query construction is exercised
    on every instance.
    """
    rows = []
    start = time.perf_counter()
    for fam, inst in suite:
        for name in KERNEL_NAMES:
            rows.append((fam, inst, name, run_kernel(name, inst)))
        rows.append((fam, inst, "oct-greedy", kernel_oct(inst, exact_budget=-1)))
    return rows, time.perf_counter() - start


def test_criterion_1_or_correctness(suite, kernelized):
    rows, elapsed = kernelized
    start = time.perf_counter()
    truth = {id(inst): brute_force_has_clique(inst) for _, inst in suite}
    violations = []
    per_kernel = {}
    for fam, inst, name, qs in rows:
        per_kernel[name] = per_kernel.get(name, 0) + 1
        got = qs.resolve(brute_force_has_clique)
        if got is not truth[id(inst)]:
            violations.append((name, fam, inst.graph, inst.k))
    total = elapsed + time.perf_counter() - start
    if min(per_kernel.values()) < 400:
        violations.append(f"too few instances per kernel: {per_kernel}")
    if total >= 300:
        violations.append(f"runtime {total:.0f}s exceeds 5 min")
    record(1, "OR-correctness of all kernels vs brute force", violations,
           f"{min(per_kernel.values())} instances per kernel, {total:.1f}s")


def test_criterion_2_query_count_bounds(kernelized):
    rows, _ = kernelized
    violations = []
    for fam, inst, name, qs in rows:
        n, m = inst.graph.n, inst.graph.m
        bound = {
            "degeneracy": n,
            "dbd": max(n, 1),
            "chordal": n,
            "loc": n + 2 * m,
            "oct": m + n,
            "oct-greedy": m + n,
        }[name]
        if len(qs) > bound:
            violations.append((name, fam, len(qs), bound))
    record(2, "query-count bounds", violations, f"{len(rows)} query sets")


def test_criterion_3_query_size_bounds(kernelized):
    rows, _ = kernelized
    violations = []
    checked = 0
    for fam, inst, name, qs in rows:
        x = qs.modulator_size or 0
        bound = {
            "degeneracy": qs.parameter_value + 1,
            "oct": x + 2,
            "oct-greedy": x + 2,
            "dbd": x + 2 + 1,  # d = 2 is the pipeline default
            "chordal": x + inst.k,
            "loc": None,
        }[name]
        if name == "degeneracy" and qs.parameter_value != degeneracy_ordering(inst.graph).degeneracy:
            violations.append((name, fam, "parameter is not the computed degeneracy"))
        for q in qs.queries:
            checked += 1
            if bound is not None and q.instance.graph.n > bound:
                violations.append((name, fam, q.instance.graph.n, bound))
            if induced_subgraph(inst.graph, q.vertices)[0] != q.instance.graph:
                violations.append((name, fam, "query is not an induced subgraph"))
        try:
            check_bounds("oct" if name == "oct-greedy" else name, inst, qs)
        except InvariantViolation as exc:
            violations.append((name, fam, str(exc)))
    record(3, "query-size bounds", violations, f"{checked} queries")


def test_criterion_4_batching_law(kernelized):
    rows, _ = kernelized
    start = time.perf_counter()
    violations = []
    checked = 0
    for fam, inst, name, qs in rows:
        n = max(encoding_size(inst.graph), 2)
        raw_or = qs.resolve(brute_force_has_clique)
        for c in (0, 1, 2):
            out = batch_queries(qs, c, n)
            g = group_size(c, n)
            expected = -(-len(qs) // g)
            checked += 1
            if len(out) != expected:
                violations.append((name, fam, c, len(out), expected))
            if out.resolve(brute_force_has_clique) is not raw_or:
                violations.append((name, fam, c, "batched OR differs"))
    elapsed = time.perf_counter() - start
    if elapsed >= 180:
        violations.append(f"runtime {elapsed:.0f}s exceeds 3 min")
    record(4, "batching count law and answer preservation, c in {0,1,2}", violations,
           f"{checked} batchings, {elapsed:.1f}s")


def test_criterion_5_decomposition_oracles(suite):
    atlas = small_connected_graphs()
    violations = []
    seven = sum(1 for g in atlas if g.n == 7)
    if seven != 853:
        violations.append(f"atlas has {seven} connected 7-vertex graphs, expected 853")
    for g in atlas:
        if degeneracy_ordering(g).degeneracy != exhaustive_degeneracy(g):
            violations.append(("5a degeneracy", g.edges()))
        if chordality_check(g).is_chordal == has_long_induced_cycle(g):
            violations.append(("5b chordality", g.edges()))
    for g in atlas + [inst.graph for _, inst in suite]:
        td = heuristic_tree_decomposition(g)
        if validate_tree_decomposition(td, g) is not None:
            violations.append(("5c td invalid", g.edges()))
            continue
        small = reduce_bag_count(td, g)
        if validate_tree_decomposition(small, g) is not None or len(small.bags) > g.n or small.width != td.width:
            violations.append(("5c reduce", g.edges()))
        bd = block_decomposition(g)
        edges = sorted(e for b in bd.blocks for e in block_edges(g, b))
        if edges != g.edges() or sum(len(b) for b in bd.blocks) > g.n + 2 * g.m:
            violations.append(("5d blocks", g.edges()))
    record(5, "decomposition oracles (degeneracy, chordality, tree decompositions, blocks)", violations,
           f"{len(atlas)} atlas graphs + {len(suite)} suite graphs")


def test_criterion_6_modulator_certification(suite):
    start = time.perf_counter()
    rng = random.Random(606)
    violations = []
    for i in range(300):
        g = gen.gnp(rng.randint(1, 14), rng.choice([0.1, 0.2, 0.3, 0.5, 0.8]), seed=rng.randrange(10**9))
        best = min_oct(g)
        res = oct_exact(g, g.n, node_cap=None)
        if res.status is not OctStatus.FOUND or len(res.modulator) != best or not certify(g, res.modulator):
            violations.append(("oct_exact", g.edges(), best))
    for i in range(120):
        g = gen.gnp(rng.randint(1, 14), rng.choice([0.1, 0.2, 0.3, 0.5]), seed=rng.randrange(10**9))
        for d in (0, 1, 2):
            best = min_degree_modulator(g, d)
            for p in range(4):
                x = bounded_degree_modulator(g, d, p)
                if x is None and best <= p:
                    violations.append(("dbd No", g.edges(), d, p, best))
                if x is not None and (len(x) > p * (p + d + 1) or not certify(g, x)):
                    violations.append(("dbd Found", g.edges(), d, p))
    for _, inst in suite:
        g = inst.graph
        for mod in (oct_heuristic(g), chordal_modulator_greedy(g)):
            if not certify(g, mod):
                violations.append((mod.target_class.value, g.edges()))
        for d in (0, 1, 2):
            p = 0
            while (x := bounded_degree_modulator(g, d, p)) is None:
                p += 1
            if not certify(g, x):
                violations.append(("degree", d, g.edges()))
    elapsed = time.perf_counter() - start
    if elapsed >= 300:
        violations.append(f"runtime {elapsed:.0f}s exceeds 5 min")
    record(6, "modulator minimality, soundness and certification", violations, f"{elapsed:.1f}s")


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Each new vertex attaches to a subset of an existing clique, so every graph built is chordal."""
    cliques = [[0]]
    edges = []
    for v in range(1, n):
        base = rng.choice(cliques)
        attach = [u for u in base if rng.random() < 0.8]
        edges.extend((u, v) for u in attach)
        cliques.append(attach + [v])
    return Graph.from_edges(n, edges)


def test_criterion_7_immediate_answers():
    rng = random.Random(707)
    violations = []
    # bipartite inputs under the longest-odd-cycle kernel with k = 3
    for i in range(100):
        g = gen.bipartite_plus_edges(rng.randint(1, 30), rng.choice([0.1, 0.3, 0.6]), 0, seed=i)
        qs = kernel_longest_odd_cycle(CliqueInstance(g, 3))
        if len(qs) != 0 or qs.immediate_answer is not Answer.NO:
            violations.append(("bipartite loc", g.edges()))
    # chordal inputs holding a k-clique
    for i in range(100):
        g = random_chordal(rng.randint(1, 20), rng)
        omega = max_clique_size(g)
        k = rng.randint(1, omega)
        qs = kernel_chordal(CliqueInstance(g, k))
        if not chordality_check(g).is_chordal or qs.immediate_answer is not Answer.YES:
            violations.append(("chordal immediate", g.edges(), k))
    # k <= 2 short-circuits
    for k in (1, 2):
        for i in range(100):
            g = gen.gnp(rng.randint(0, 8), rng.choice([0.0, 0.05, 0.3]), seed=rng.randrange(10**9))
            inst = CliqueInstance(g, k)
            truth = brute_force_has_clique(inst)
            qs = kernel_longest_odd_cycle(inst)
            if qs.immediate_answer is not truth or has_clique(inst) is not truth:
                violations.append((f"k={k} short-circuit", g.edges()))
    record(7, "immediate-answer paths", violations)


def test_criterion_8_bench_determinism(tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    manifest = corpus / "manifest.json"
    specs = [
        ("gnp", 20, ["--p", "0.3", "--k", "4"]),
        ("gnp", 25, ["--p", "0.6", "--k", "5"]),
        ("bipartite-plus-edges", 24, ["--p", "0.3", "--extra", "3", "--k", "3"]),
        ("bounded-degree", 30, ["--d", "3", "--k", "3"]),
        ("planted-clique", 30, ["--k", "5"]),
        ("cycle", 11, ["--k", "3"]),
        ("complete", 6, ["--k", "6"]),
    ]
    for i, (family, size, extra) in enumerate(specs):
        out = corpus / f"g{i}_{family}.el"
        main(["gen", family, str(size), "--seed", str(i), "--out", str(out), "--manifest", str(manifest), *extra])
    outputs = []
    codes = []
    for run_id in range(2):
        out = tmp_path / f"bench{run_id}.csv"
        codes.append(main(["bench", str(corpus), "--kernels", ",".join(KERNEL_NAMES), "--c", "0,1,2",
                           "--out", str(out), "--verify"]))
        outputs.append(out.read_bytes())
    violations = []
    if outputs[0] != outputs[1]:
        violations.append("CSV outputs differ between runs")
    if codes != [0, 0]:
        violations.append(f"bench exit codes {codes}")
    rows = outputs[0].decode().strip().splitlines()
    if len(rows) != 1 + len(specs) * len(KERNEL_NAMES) * 3:
        violations.append(f"{len(rows) - 1} rows")
    record(8, "bench output is byte-identical across runs", violations, f"{len(rows) - 1} rows")
