"""Command line interface: ``run``, ``bench`` and ``gen``.

Exit codes: 0 ok, 1 usage or unreadable corpus entries, 2 parse error,
3 verification disagreement, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .generators import FAMILIES, generate
from .graph import GraphParseError, GraphValidationError, read_graph, to_edge_list
from .kernels import KERNELS
from .pipeline import InvariantViolation, bench, rows_to_csv, rows_to_json, run


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clique-kernels", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="decide k-clique on one graph through a kernel")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kernel", choices=sorted(KERNELS), required=True)
    p.add_argument("--d", type=int, default=2, help="degree bound for the dbd kernel")
    p.add_argument("--c", type=int, default=None, help="batching exponent (omit for no batching)")
    p.add_argument("--verify", action="store_true", help="compare against the brute-force oracle")
    p.add_argument("--emit-queries", metavar="DIR")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)

    b = sub.add_parser("bench", help="run kernels over a corpus with a manifest.json")
    b.add_argument("corpus")
    b.add_argument("--kernels", default=",".join(KERNELS))
    b.add_argument("--c", default="0,1,2")
    b.add_argument("--d", type=int, default=2)
    b.add_argument("--verify", action="store_true")
    b.add_argument("--timing", action="store_true", help="fill the ms column (output no longer reproducible)")
    b.add_argument("--out", required=True, help="output file; .json for JSON, otherwise CSV")

    gparser = sub.add_parser("gen", help="write a generated graph as an edge list")
    gparser.add_argument("family", choices=FAMILIES)
    gparser.add_argument("size", type=int)
    gparser.add_argument("--seed", type=int, default=0)
    gparser.add_argument("--p", type=float)
    gparser.add_argument("--k", type=int, help="planted clique size, or k to record in the manifest")
    gparser.add_argument("--d", type=int)
    gparser.add_argument("--extra", type=int)
    gparser.add_argument("--out", help="output file (default stdout)")
    gparser.add_argument("--manifest", help="append an entry to this corpus manifest.json")
    return parser


def _cmd_run(args) -> int:
    try:
        g = read_graph(args.file)
    except (GraphParseError, GraphValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.k < 1:
        print("error: --k must be >= 1", file=sys.stderr)
        return 1
    try:
        report = run(g, args.k, args.kernel, c=args.c, d=args.d, verify=args.verify,
                     emit_queries=args.emit_queries, jobs=args.jobs)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 4
    if args.json:
        print(report.to_json())
    else:
        print(f"answer: {report.answer}")
        print(f"kernel: {report.kernel} (parameter value {report.parameter_value})")
        print(f"queries: {report.query_count_raw} raw, {report.query_count_batched} sent")
        print(f"largest query: {report.max_query_vertices} vertices, size {report.max_query_encoding_size}")
        if report.verified:
            print(f"verified: {report.verified}")
        print(f"time: {report.wall_time_ms} ms")
    return 3 if report.verified == "disagree" else 0


def _cmd_bench(args) -> int:
    errors: list[str] = []
    try:
        rows = bench(args.corpus, _kernel_list(args.kernels), _int_list(args.c), d=args.d,
                     verify=args.verify, timing=args.timing, errors=errors)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 4
    text = rows_to_json(rows) if args.out.endswith(".json") else rows_to_csv(rows)
    Path(args.out).write_text(text)
    for err in errors:
        print(f"skipped {err}", file=sys.stderr)
    if any(r["verified"] == "disagree" for r in rows):
        return 3
    return 1 if errors else 0


def _kernel_list(text: str) -> list[str]:
    names = [x.strip() for x in text.split(",") if x.strip()]
    unknown = [x for x in names if x not in KERNELS]
    if unknown:
        raise SystemExit(f"unknown kernels: {', '.join(unknown)}")
    return names


def _cmd_gen(args) -> int:
    params = {key: getattr(args, key) for key in ("p", "k", "d", "extra") if getattr(args, key) is not None}
    g, meta = generate(args.family, args.size, args.seed, **params)
    text = to_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.manifest:
        if not args.out:
            raise SystemExit("--manifest needs --out")
        k = args.k if args.k is not None else meta.get("k")
        if k is None:
            raise SystemExit("--manifest needs --k for this family")
        path = Path(args.manifest)
        manifest = json.loads(path.read_text()) if path.exists() else {"schema": 1, "instances": []}
        rel = str(Path(args.out).resolve().relative_to(path.resolve().parent))
        manifest["instances"] = [e for e in manifest["instances"] if e["file"] != rel]
        manifest["instances"].append({"file": rel, "k": k, **{x: y for x, y in meta.items() if x != "k"}})
        manifest["instances"].sort(key=lambda e: e["file"])
        path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"run": _cmd_run, "bench": _cmd_bench, "gen": _cmd_gen}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
