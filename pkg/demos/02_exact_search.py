"""
Exact search and automatic solving
==================================

Graphs without a formula go to a backtracking search over element
bitmasks.  solve_auto picks the right route and always re-verifies.
"""

from overlapnum.graph import Graph, add_pendants, complete_graph, petersen_graph
from overlapnum.search import (SearchBudget, cf_overlap_number_exact,
                               intersection_number_exact, overlap_number_exact)
from overlapnum.solve import solve_auto

# a triangle with a tail: no formula applies
g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
out = overlap_number_exact(g)
print("paw:", out.value, out.witness.as_lists(), f"({out.nodes} nodes)")

# containment-free versus intersection number, via pendants
net = add_pendants(complete_graph(3))
print("theta(K_3) =", intersection_number_exact(complete_graph(3)).value)
print("cf(net)    =", cf_overlap_number_exact(net).value)

# the dispatcher
for h in (complete_graph(7), g, Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])):
    res = solve_auto(h)
    print(res.method, "->", res.value)

# a tight budget falls back to a labelled upper bound
res = solve_auto(petersen_graph(), SearchBudget(max_universe=4))
print(res.method, res.value, "exact" if res.exact else "upper bound only")
