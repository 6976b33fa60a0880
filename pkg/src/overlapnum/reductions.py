"""Hardness-reduction generators and the small SAT oracle used to check them.

Literals are DIMACS-style signed integers: ``+i`` / ``-i`` for variable
``i`` in ``1..num_vars``.  In generated set systems the literal ``+i``
becomes element ``2(i-1)`` and ``-i`` becomes ``2(i-1)+1``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .graph import Graph, add_pendants, disjoint_union, empty_graph
from .representation import (Representation, comparable, containment_count,
                             graph_from_containment, graph_from_representation,
                             overlaps, verify, verify_containment)
from .search import cf_overlap_number_exact

MIN_VARS = 4
BRUTE_SAT_MAX_VARS = 24


class SatMode(enum.Enum):
    STANDARD = "3sat"
    NAE = "nae"


@dataclass(frozen=True)
class CnfInstance:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    mode: SatMode = SatMode.STANDARD

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        clauses = tuple(tuple(c) for c in self.clauses)
        for i, c in enumerate(clauses):
            if len(c) != 3:
                raise ValueError(f"clause {i} has {len(c)} literals, expected 3")
            if len(set(c)) != 3:
                raise ValueError(f"clause {i} repeats a literal")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {i}: literal {lit} out of range")
        object.__setattr__(self, "clauses", clauses)


def literal_element(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (lit < 0)


def element_literal(e: int) -> int:
    v = e // 2 + 1
    return -v if e % 2 else v


def clause_satisfied(clause, assignment, mode: SatMode) -> bool:
    vals = [assignment[abs(l) - 1] == (l > 0) for l in clause]
    if mode is SatMode.NAE:
        return any(vals) and not all(vals)
    return any(vals)


def is_satisfying(f: CnfInstance, assignment) -> bool:
    return all(clause_satisfied(c, assignment, f.mode) for c in f.clauses)


def brute_sat(f: CnfInstance) -> tuple[bool, ...] | None:
    """First satisfying assignment in binary counting order, or ``None``."""
    if f.num_vars > BRUTE_SAT_MAX_VARS:
        raise ValueError(f"brute force limited to {BRUTE_SAT_MAX_VARS} variables")
    for bits in itertools.product((False, True), repeat=f.num_vars):
        if is_satisfying(f, bits):
            return bits
    return None


# -- extension instances --------------------------------------------------------

class ExtensionKind(enum.Enum):
    OVERLAP = "overlap"
    CONTAINMENT = "containment"


@dataclass(frozen=True)
class ExtensionInstance:
    graph: Graph
    representation: Representation
    target: frozenset
    kind: ExtensionKind
    num_vars: int | None = None
    # set on the fixed small instances emitted when the formula was solved directly
    presolved: tuple[bool, ...] | None = field(default=None, compare=False)
    trivial: bool = False

    def is_solution(self, s) -> bool:
        s = frozenset(s)
        if not s <= self.representation.universe:
            return False
        if self.kind is ExtensionKind.OVERLAP:
            rel = overlaps
        else:
            if not s:
                return False
            rel = comparable
        return all(rel(s, self.representation[v]) == (v in self.target)
                   for v in self.graph.vertices)


def _trivial_extension(kind: ExtensionKind, yes: bool, assignment) -> ExtensionInstance:
    # K_1 holding {0}: only S = {0} or the empty set are available, and
    # neither overlaps {0}, while {0} is always nested with it.
    g, rep = empty_graph(1), Representation.of({0})
    solvable_target = frozenset() if kind is ExtensionKind.OVERLAP else frozenset({0})
    unsolvable_target = frozenset({0}) if kind is ExtensionKind.OVERLAP else frozenset()
    return ExtensionInstance(g, rep, solvable_target if yes else unsolvable_target, kind,
                             presolved=assignment, trivial=True)


def nae3sat_to_overlap_extension(f: CnfInstance) -> ExtensionInstance:
    """Variables become ``{x, not x}`` sets, clauses become their literal
    sets, and the new set must overlap all of them."""
    if f.mode is not SatMode.NAE:
        raise ValueError("expected a not-all-equal instance")
    if f.num_vars < MIN_VARS:
        sol = brute_sat(f)
        return _trivial_extension(ExtensionKind.OVERLAP, sol is not None, sol)
    sets = [frozenset({2 * i, 2 * i + 1}) for i in range(f.num_vars)]
    sets += [frozenset(literal_element(l) for l in c) for c in f.clauses]
    rep = Representation(tuple(sets))
    g = graph_from_representation(rep)
    assert verify(g, rep).valid
    return ExtensionInstance(g, rep, frozenset(g.vertices), ExtensionKind.OVERLAP,
                             num_vars=f.num_vars)


def extension_to_assignment(inst: ExtensionInstance, s) -> tuple[bool, ...]:
    """Read a truth assignment off a solution of a generated instance: the
    literals in ``s`` are the true ones."""
    s = frozenset(s)
    if not inst.is_solution(s):
        raise ValueError("not a valid extension of this instance")
    if inst.trivial:
        if inst.presolved is None:
            raise ValueError("instance was generated from an unsatisfiable formula")
        return inst.presolved
    # containment solutions may leave variables unset; those become False
    partial = inst.kind is ExtensionKind.CONTAINMENT
    out = []
    for i in range(inst.num_vars):
        pos, neg = 2 * i in s, 2 * i + 1 in s
        if pos and neg or (pos == neg and not partial):
            raise ValueError(f"extension fixes variable {i + 1} inconsistently")
        out.append(pos)
    return tuple(out)


extension_to_nae_assignment = extension_to_assignment


def threesat_to_containment_extension(f: CnfInstance) -> ExtensionInstance:
    """Clause sets are the complement of the clause among all literals plus
    a marker element; the marker alone sits on an extra vertex, the only target."""
    if f.mode is not SatMode.STANDARD:
        raise ValueError("expected a standard 3SAT instance")
    if f.num_vars < MIN_VARS:
        sol = brute_sat(f)
        return _trivial_extension(ExtensionKind.CONTAINMENT, sol is not None, sol)
    marker = 2 * f.num_vars
    literals = frozenset(range(2 * f.num_vars))
    # repeated clauses would give equal sets, which a containment
    # representation cannot hold; the formula is unchanged by dropping them
    clauses = list(dict.fromkeys(frozenset(c) for c in f.clauses))
    sets = [frozenset({2 * i, 2 * i + 1}) for i in range(f.num_vars)]
    sets += [(literals - {literal_element(l) for l in c}) | {marker} for c in clauses]
    sets.append(frozenset({marker}))
    rep = Representation(tuple(sets))
    g = graph_from_containment(rep)
    assert not verify_containment(g, rep)
    return ExtensionInstance(g, rep, frozenset({g.n - 1}), ExtensionKind.CONTAINMENT,
                             num_vars=f.num_vars)


# -- containment-free and limited-containment number -------------------------

def intersection_to_cf_overlap(g: Graph, k: int) -> tuple[Graph, int]:
    return add_pendants(g), k + 2 * g.n


def build_gadget_B(n: int, i: int = 1) -> Graph:
    """Gadget component: ``n+1`` disjoint edges on ``v_1..v_{2n+2}`` (ids
    ``0..2n+1``) and three mutually nonadjacent vertices ``x, y, z`` (ids
    ``2n+2, 2n+3, 2n+4``) joined to every ``v``.  ``i`` is only the
    gadget's position in the reduction and does not change its shape."""
    if n < MIN_VARS:
        raise ValueError("gadgets are defined for n >= 4")
    if i < 1:
        raise ValueError("gadget index starts at 1")
    nv = 2 * n + 2
    edges = {(2 * j, 2 * j + 1) for j in range(n + 1)}
    for hub in range(nv, nv + 3):
        edges.update((v, hub) for v in range(nv))
    return Graph(nv + 3, frozenset(edges))


def gadget_representations(n: int) -> tuple[Representation, Representation]:
    """``(one-containment rep of size 3(n+1), containment-free rep of size 4(n+1))``."""
    if n < MIN_VARS:
        raise ValueError("gadgets are defined for n >= 4")
    e = n + 1
    nv = 2 * e
    # three elements per matching edge: shared a_j, privates b_j and c_j
    tight = [None] * (nv + 3)
    for j in range(e):
        a, b, c = 3 * j, 3 * j + 1, 3 * j + 2
        tight[2 * j], tight[2 * j + 1] = frozenset({a, b}), frozenset({a, c})
    shared = frozenset(3 * j for j in range(e))
    tight[nv] = shared
    tight[nv + 1] = frozenset(3 * j + d for j in range(e) for d in (1, 2))
    tight[nv + 2] = shared
    # four per edge: shared a_j, b_j and privates c_j, d_j
    loose = [None] * (nv + 3)
    for j in range(e):
        a, b, c, d = 4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3
        loose[2 * j], loose[2 * j + 1] = frozenset({a, b, c}), frozenset({a, b, d})
    loose[nv] = frozenset(4 * j for j in range(e))
    loose[nv + 1] = frozenset(4 * j + 1 for j in range(e))
    loose[nv + 2] = frozenset(4 * j + d for j in range(e) for d in (2, 3))
    return Representation(tuple(tight)), Representation(tuple(loose))


@dataclass(frozen=True)
class LContainmentInstance:
    graph: Graph
    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError("budgets must be nonnegative")

    def accepts(self, r: Representation) -> bool:
        """Does ``r`` certify a yes-answer (valid, at most ``k`` elements, at
        most ``l`` nested nonadjacent pairs)?"""
        if r.n != self.graph.n or not verify(self.graph, r).valid:
            return False
        return r.size <= self.k and containment_count(self.graph, r) <= self.l


def cf_to_lcontainment(g: Graph, k: int, l: int, budget=None) -> LContainmentInstance:
    """Append ``2l`` gadgets and raise the size budget by ``7 l (n+1)``.

    Graphs with fewer than four vertices are decided directly with the
    containment-free oracle and mapped to a fixed one-vertex instance.
    """
    if k < 0 or l < 0:
        raise ValueError("budgets must be nonnegative")
    n = g.n
    if n < MIN_VARS:
        out = cf_overlap_number_exact(g, budget)
        if not out.exact:
            raise RuntimeError("containment-free oracle ran out of budget")
        yes = out.value <= k
        return LContainmentInstance(empty_graph(1), 1 if yes else 0, l)
    gadgets = [build_gadget_B(n, i) for i in range(1, 2 * l + 1)]
    h = disjoint_union([g, *gadgets]) if gadgets else g
    return LContainmentInstance(h, k + 3 * l * (n + 1) + 4 * l * (n + 1), l)
