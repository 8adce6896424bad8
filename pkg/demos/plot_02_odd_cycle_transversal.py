"""
Odd cycle transversal kernel
============================

If deleting a set X leaves a bipartite graph, a clique of size three or more
uses at most one edge outside X. The kernel asks one question per edge of
G - X, plus one per vertex left isolated there.
"""

from clique_kernels import CliqueInstance, brute_force_has_clique, kernel_oct
from clique_kernels.generators import gnp
from clique_kernels.modulators import oct_exact, oct_heuristic

g = gnp(24, 0.45, seed=5)
print(f"graph: {g.n} vertices, {g.m} edges")

###############################################################################
# The exact search (iterative compression) is run with a budget of
# ceil(log2 n); when it succeeds, the instance is simply solved outright.

exact = oct_exact(g, 10)
print("exact search within 10:", exact.status.value)
greedy = oct_heuristic(g)
print(f"greedy transversal: {len(greedy)} vertices {list(greedy.vertices)}")

for budget in (None, -1):
    qs = kernel_oct(CliqueInstance(g, 4), exact_budget=budget)
    label = "default budget" if budget is None else "exact search off"
    if qs.immediate_answer is not None:
        print(f"{label}: decided directly -> {qs.immediate_answer.value}")
    else:
        largest = max(q.instance.graph.n for q in qs.queries)
        print(f"{label}: {len(qs)} queries of at most {largest} vertices "
              f"-> {qs.resolve(brute_force_has_clique).value}")
