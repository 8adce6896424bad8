"""End-to-end runs: kernelize, batch, solve, verify, and report."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .batching import batch_queries, group_size
from .graph import CliqueInstance, Graph, encoding_size, read_graph, to_edge_list
from .kernels import QuerySet, run_kernel
from .solver import Answer, brute_force_has_clique, has_clique

SCHEMA_VERSION = 1

CSV_COLUMNS = (
    "file", "kernel", "c", "n_G", "m_G", "n", "parameter_value", "raw", "batched",
    "max_q_vertices", "max_q_size", "answer", "verified", "ms",
)


class InvariantViolation(RuntimeError):
    """A kernel or batching bound failed on a concrete instance."""


class VerificationFailure(RuntimeError):
    pass


@dataclass
class RunReport:
    answer: str
    kernel: str
    parameter_value: int
    query_count_raw: int
    query_count_batched: int
    max_query_vertices: int
    max_query_encoding_size: int
    wall_time_ms: int | None
    verified: str | None
    n_G: int
    m_G: int
    n: int
    c: int | None
    bypassed: bool

    def to_json(self) -> str:
        return json.dumps({"schema": SCHEMA_VERSION, **asdict(self)}, sort_keys=True)


def check_bounds(name: str, inst: CliqueInstance, qs: QuerySet, d: int = 2) -> None:
    """Raise InvariantViolation if a query-count or query-size bound fails."""
    g, k = inst.graph, inst.k
    n, m = g.vertex_count, g.edge_count
    q = len(qs.queries)
    sizes = [query.instance.graph.vertex_count for query in qs.queries]
    x = qs.modulator_size or 0
    if name == "degeneracy":
        count_bound, size_bound = n, qs.parameter_value + 1
    elif name == "oct":
        count_bound, size_bound = m + n, x + 2
    elif name == "dbd":
        count_bound, size_bound = max(n, 1), x + d + 1
    elif name == "chordal":
        count_bound, size_bound = n, x + k
    elif name == "loc":
        count_bound, size_bound = n + 2 * m, None
    else:
        raise KeyError(name)
    if q > count_bound:
        raise InvariantViolation(f"{name}: {q} queries exceed bound {count_bound}")
    if size_bound is not None and sizes and max(sizes) > size_bound:
        raise InvariantViolation(f"{name}: query with {max(sizes)} vertices exceeds bound {size_bound}")
    for query in qs.queries:
        if query.instance.k != k:
            raise InvariantViolation(f"{name}: query changed k")


def _solve_all(instances, jobs: int) -> list[Answer]:
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(has_clique, instances))
    return [has_clique(i) for i in instances]


def write_queries(qs: QuerySet, out_dir, kernel: str) -> None:
    """query_0000.el ... plus manifest.json describing k* and per-query provenance."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    entries = []
    for i, query in enumerate(qs.queries):
        name = f"query_{i:04d}.el"
        (out / name).write_text(to_edge_list(query.instance.graph))
        entries.append({"file": name, "k": query.instance.k, "note": query.note,
                        "vertices": list(query.vertices.members)})
    k_star = max((q.instance.k for q in qs.queries), default=None)
    manifest = {
        "schema": SCHEMA_VERSION,
        "kernel": kernel,
        "k*": k_star,
        "parameter_name": qs.parameter_name,
        "parameter_value": qs.parameter_value,
        "immediate_answer": qs.immediate_answer.value if qs.immediate_answer else None,
        "provenance": entries,
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def run(
    g: Graph,
    k: int,
    kernel: str,
    c: int | None = None,
    d: int = 2,
    verify: bool = False,
    emit_queries=None,
    jobs: int = 1,
    timing: bool = True,
) -> RunReport:
    start = time.perf_counter()
    inst = CliqueInstance(g, k)
    n = encoding_size(g)
    raw = run_kernel(kernel, inst, d=d)
    check_bounds(kernel, inst, raw, d=d)
    sent = batch_queries(raw, c, max(n, 2)) if c is not None else raw
    if c is not None:
        expected = -(-len(raw.queries) // group_size(c, max(n, 2)))
        if raw.immediate_answer is None and len(sent.queries) != expected:
            raise InvariantViolation(f"batching produced {len(sent.queries)} queries, expected {expected}")
    if emit_queries is not None:
        write_queries(sent, emit_queries, kernel)

    # the kernel is not worth using when a query is as large as the input itself
    largest_raw = max((encoding_size(q.instance.graph) for q in raw.queries), default=0)
    bypassed = raw.immediate_answer is None and bool(raw.queries) and largest_raw >= n
    if raw.immediate_answer is not None:
        answer = raw.immediate_answer
    elif bypassed:
        answer = has_clique(inst)
    else:
        answers = _solve_all(sent.instances, jobs)
        answer = Answer.of(any(a is Answer.YES for a in answers))

    verified = None
    if verify:
        truth = brute_force_has_clique(inst)
        verified = "agree" if truth is answer else "disagree"
    elapsed = round((time.perf_counter() - start) * 1000) if timing else None
    return RunReport(
        answer=answer.value,
        kernel=kernel,
        parameter_value=raw.parameter_value,
        query_count_raw=len(raw.queries),
        query_count_batched=len(sent.queries),
        max_query_vertices=max((q.instance.graph.vertex_count for q in sent.queries), default=0),
        max_query_encoding_size=max((encoding_size(q.instance.graph) for q in sent.queries), default=0),
        wall_time_ms=elapsed,
        verified=verified,
        n_G=g.vertex_count,
        m_G=g.edge_count,
        n=n,
        c=c,
        bypassed=bypassed,
    )


def load_corpus(corpus_dir) -> list[dict]:
    """Entries of <corpus_dir>/manifest.json, each with at least ``file`` and ``k``."""
    manifest = json.loads((Path(corpus_dir) / "manifest.json").read_text())
    entries = manifest["instances"] if isinstance(manifest, dict) else manifest
    return sorted(entries, key=lambda e: e["file"])


def bench(
    corpus_dir,
    kernels,
    cs,
    d: int = 2,
    verify: bool = False,
    timing: bool = False,
    errors: list | None = None,
) -> list[dict]:
    """One row per (file, kernel, c), files in name order.

    ``ms`` stays empty unless ``timing`` is set, so repeated runs are byte-identical.
    Entries that cannot be read are appended to ``errors`` and skipped.
    """
    rows = []
    for entry in load_corpus(corpus_dir):
        try:
            g = read_graph(Path(corpus_dir) / entry["file"])
        except (OSError, ValueError) as exc:
            if errors is None:
                raise
            errors.append(f"{entry['file']}: {exc}")
            continue
        for kernel in kernels:
            for c in cs:
                rep = run(g, int(entry["k"]), kernel, c=c, d=d, verify=verify, timing=timing)
                rows.append({
                    "file": entry["file"],
                    "kernel": kernel,
                    "c": c,
                    "n_G": rep.n_G,
                    "m_G": rep.m_G,
                    "n": rep.n,
                    "parameter_value": rep.parameter_value,
                    "raw": rep.query_count_raw,
                    "batched": rep.query_count_batched,
                    "max_q_vertices": rep.max_query_vertices,
                    "max_q_size": rep.max_query_encoding_size,
                    "answer": rep.answer,
                    "verified": rep.verified or "",
                    "ms": "" if rep.wall_time_ms is None else rep.wall_time_ms,
                })
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def rows_to_json(rows: list[dict]) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, "rows": rows}, indent=2, sort_keys=True) + "\n"
