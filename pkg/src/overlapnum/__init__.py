"""Overlap representations of graphs: closed-form overlap numbers, exact
search oracles, verification, and hardness-reduction generators."""

from .closed_forms import (SizedRepresentation, binomial_lower_bound, caterpillar_representation,
                           clique_overlap_number, clique_representation, compose_components,
                           cycle_representation, ecc_overlap_representation,
                           kpartite_representation, milner, milner_s1_recurrence,
                           path_representation)
from .graph import (ClassKind, Graph, GraphClass, add_pendants, classify, components,
                    disjoint_union, induced_subgraph, vertex_multiply)
from .representation import (PairRelation, Representation, VerifyReport, canonicalize,
                             check_containment_component, classify_pair, containment_count,
                             graph_from_representation, restrict, size, verify)
from .search import (SearchBudget, SearchOutcome, Status, cf_overlap_number_exact,
                     containment_extension_solve, intersection_number_exact,
                     overlap_extension_solve, overlap_number_exact)
from .solve import SolveResult, solve_auto

__version__ = "0.1.0"
