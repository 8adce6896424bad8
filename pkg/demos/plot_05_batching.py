"""
Query batching
==============

Queries are grouped ceil(log2(n)^c) at a time and each group is merged into
one instance: apex vertices bring every query to the same k, then the
disjoint union answers Yes exactly when one of its parts does.
"""

from clique_kernels import CliqueInstance, encoding_size, kernel_degeneracy
from clique_kernels.batching import batch_queries, group_size
from clique_kernels.generators import gnp
from clique_kernels.pipeline import run
from clique_kernels.solver import has_clique

g = gnp(30, 0.3, seed=2)
inst = CliqueInstance(g, 5)
n = encoding_size(g)
raw = kernel_degeneracy(inst)
print(f"encoding size n = {n}, raw queries = {len(raw)}")

for c in range(3):
    out = batch_queries(raw, c, n)
    largest = max(q.instance.graph.n for q in out.queries)
    print(f"c = {c}: group size {group_size(c, n):4d} -> {len(out):2d} queries, "
          f"largest {largest} vertices, answer {out.resolve(has_clique).value}")

###############################################################################
# The pipeline does the same end to end and checks itself against the oracle.

report = run(g, 5, "degeneracy", c=1, verify=True, timing=False)
print(report.to_json())
