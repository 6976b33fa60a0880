"""
Overlap numbers of structured graphs
====================================

Cliques, complete multipartite graphs, paths, cycles and caterpillars all
have exact formulas and explicit minimum representations.
"""

import numpy as np

from overlapnum import closed_forms as cf
from overlapnum.graph import caterpillar_graph, complete_graph, cycle_graph, path_graph
from overlapnum.representation import verify

# cliques: smallest m whose intersecting antichain is big enough
for n in (1, 2, 3, 4, 5, 10, 11, 100):
    print(f"phi(K_{n}) = {cf.clique_overlap_number(n)}")

sr = cf.clique_representation(5)
print("K_5 witness:", sr.representation.as_lists())
print("valid:", verify(complete_graph(5), sr.representation).valid)

# the same numbers, vectorised
ns = np.array([2, 10, 1000, 10**6])
print(dict(zip(ns.tolist(), cf.clique_overlap_numbers(ns).tolist())))

# paths and cycles
print("P_6:", cf.path_representation(6).representation.as_lists())
print("C_6:", cf.cycle_representation(6).representation.as_lists())
assert verify(path_graph(6), cf.path_representation(6).representation).valid
assert verify(cycle_graph(6), cf.cycle_representation(6).representation).valid

# a caterpillar with spine 0-1-2: one leaf, none, two
g = caterpillar_graph([1, 0, 2])
sr = cf.caterpillar_representation([0, 1, 2], [[3], [], [4, 5]], g)
print("caterpillar size", sr.claimed_size, sr.representation.as_lists())
