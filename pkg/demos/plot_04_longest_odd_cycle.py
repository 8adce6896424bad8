"""
Blocks and tree decompositions
==============================

A clique of size three or more lives inside a single non-bipartite block, and
inside a single bag of any tree decomposition of that block.
"""

from clique_kernels import CliqueInstance, brute_force_has_clique, kernel_longest_odd_cycle
from clique_kernels.decompositions import block_decomposition, heuristic_tree_decomposition, reduce_bag_count
from clique_kernels.graph import Graph, induced_subgraph

# a chain of odd cycles and a 4-clique, glued at cut vertices
edges = [(0, 1), (1, 2), (2, 0),                        # triangle
         (2, 3), (3, 4), (4, 5), (5, 6), (6, 2),        # 5-cycle
         (6, 7), (7, 8), (8, 9), (9, 6), (6, 8), (7, 9)]  # K4
g = Graph.from_edges(10, edges)

bd = block_decomposition(g)
print("blocks:", [b.members for b in bd.blocks])
print("cut vertices:", bd.cut_vertices.members)

block = max(bd.blocks, key=len)
sub, _ = induced_subgraph(g, block)
td = heuristic_tree_decomposition(sub)
print(f"largest block: {len(block)} vertices, min-fill width {td.width}, "
      f"{len(td.bags)} bags -> {len(reduce_bag_count(td, sub).bags)} after contraction")
print(td.to_pace())

qs = kernel_longest_odd_cycle(CliqueInstance(g, 4))
print(f"{len(qs)} queries (bound n + 2m = {g.n + 2 * g.m}), answer:",
      qs.resolve(brute_force_has_clique).value)
