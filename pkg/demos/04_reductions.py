"""
Reductions from satisfiability
==============================

Build extension instances from CNF formulas, solve them by brute force and
read back a satisfying assignment.
"""

from overlapnum import reductions as rd
from overlapnum.graph import path_graph
from overlapnum.search import containment_extension_solve, overlap_extension_solve

nae = rd.CnfInstance(4, ((1, 2, 3), (-1, 2, 4)), rd.SatMode.NAE)
inst = rd.nae3sat_to_overlap_extension(nae)
s = overlap_extension_solve(inst.graph, inst.representation, inst.target)
print("overlap extension:", sorted(s))
print("assignment:", rd.extension_to_nae_assignment(inst, s))

sat = rd.CnfInstance(4, ((1, 2, 3), (-1, -2, 4), (-3, -4, 2)))
inst = rd.threesat_to_containment_extension(sat)
s = containment_extension_solve(inst.graph, inst.representation, inst.target)
a = rd.extension_to_assignment(inst, s)
print("containment extension:", sorted(s), a, rd.is_satisfying(sat, a))

# the gadget used for limited containment, and its two representations
n = 4
b = rd.build_gadget_B(n)
tight, loose = rd.gadget_representations(n)
print(f"gadget: {b.n} vertices, {b.m} edges, sizes {tight.size} / {loose.size}")
print("k' for P_4, k=10, l=1:", rd.cf_to_lcontainment(path_graph(4), 10, 1).k)
