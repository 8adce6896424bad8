"""
Bounded-degree and chordal modulators
=====================================

Two kernels built around a deletion set X: one where G - X has small
maximum degree, one where G - X is chordal.
"""

from clique_kernels import CliqueInstance, brute_force_has_clique, kernel_bounded_degree, kernel_chordal
from clique_kernels.generators import bounded_degree
from clique_kernels.graph import Graph, disjoint_union

# a degree-3 graph with a dense 5-vertex blob glued on
base = bounded_degree(20, 3, seed=1)
blob = Graph.from_edges(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
g = disjoint_union([base, blob])
inst = CliqueInstance(g, 5)

qs = kernel_bounded_degree(inst, d=3)
print(f"distance to degree 3: |X| = {qs.modulator_size} (search bound p = {qs.info['p_bound']})")
print(f"{len(qs)} queries, each at most |X| + d + 1 = {qs.modulator_size + 4} vertices")
print("answer:", qs.resolve(brute_force_has_clique).value)

###############################################################################
# The chordal kernel uses a perfect elimination ordering of G - X. If some
# vertex already has k - 1 later neighbours, they form a clique and the
# answer is immediate.

qs = kernel_chordal(inst)
print(f"distance to chordal: |X| = {qs.modulator_size}")
if qs.immediate_answer is not None:
    print("immediate answer:", qs.immediate_answer.value)
else:
    print(f"{len(qs)} queries -> {qs.resolve(brute_force_has_clique).value}")
