"""
Disconnected graphs
===================

Representations of components chain together by containment, saving one
element per extra component.
"""

from overlapnum import closed_forms as cf
from overlapnum.graph import complete_graph, cycle_graph, disjoint_union
from overlapnum.representation import verify
from overlapnum.search import overlap_number_exact

parts = [cf.cycle_representation(5), cf.clique_representation(3)]
g = disjoint_union([cycle_graph(5), complete_graph(3)])
sr = cf.compose_components(parts)
print("C_5 + K_3:", sr.claimed_size, sr.representation.as_lists())
print("valid:", verify(g, sr.representation).valid)

# the search agrees on a small case
k2k2 = disjoint_union([complete_graph(2), complete_graph(2)])
print("K_2 + K_2:", overlap_number_exact(k2k2).value,
      "=", cf.compose_components([cf.clique_representation(2)] * 2).claimed_size)
