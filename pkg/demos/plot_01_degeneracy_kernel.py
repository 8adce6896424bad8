"""
Degeneracy kernel
=================

Every k-clique has a first vertex in the degeneracy order, and the rest of
the clique sits among that vertex's later neighbours. So one small query per
vertex is enough.
"""

from clique_kernels import CliqueInstance, brute_force_has_clique, kernel_degeneracy
from clique_kernels.generators import planted_clique

g, members = planted_clique(40, 6, p=0.15, seed=3)
inst = CliqueInstance(g, 6)
print(f"graph: {g.n} vertices, {g.m} edges, planted clique on {members}")

qs = kernel_degeneracy(inst)
sizes = [q.instance.graph.n for q in qs.queries]
print(f"degeneracy p = {qs.parameter_value}")
print(f"{len(qs)} queries, largest has {max(sizes)} vertices (bound p + 1 = {qs.parameter_value + 1})")

# The OR of the query answers is the answer for the whole graph
hits = [q.note for q in qs.queries if brute_force_has_clique(q.instance).value == "yes"]
print(f"queries containing a 6-clique: {hits}")
print("answer:", qs.resolve(brute_force_has_clique).value)
