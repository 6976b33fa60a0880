"""Exact overlap numbers and minimum representations for structured graphs.

All overlap-number arithmetic is done on Python integers.  The only
floating-point quantity here is :func:`binomial_lower_bound`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import ClassKind, Graph, GraphClass
from .representation import Representation, place, verify


@dataclass(frozen=True)
class SizedRepresentation:
    representation: Representation
    claimed_size: int
    class_tag: ClassKind

    def __post_init__(self):
        if self.representation.size != self.claimed_size:
            raise ValueError(f"representation uses {self.representation.size} elements, "
                             f"claimed {self.claimed_size}")


def milner(p: int, m: int) -> int:
    """Largest intersecting antichain on an m-set with pairwise intersections >= p."""
    if m < 1:
        raise ValueError("universe size must be at least 1")
    if p < 0:
        raise ValueError("intersection threshold must be nonnegative")
    return math.comb(m, (m + p + 1) // 2)


def milner_s1_values(upto: int) -> list[int]:
    """``[S(1,1), ..., S(1,upto)]`` by the two-case ratio recurrence."""
    vals = [1]
    for m in range(2, upto + 1):
        num, den = (2 * m, m - 1) if m % 2 else (2 * m, m + 2)
        q, rem = divmod(num * vals[-1], den)
        assert rem == 0, f"recurrence left a fraction at m={m}"
        vals.append(q)
    return vals


def milner_s1_recurrence(m: int) -> int:
    if m < 1:
        raise ValueError("universe size must be at least 1")
    return milner_s1_values(m)[-1]


def clique_overlap_number(n: int) -> int:
    if n < 1:
        raise ValueError("a clique needs at least one vertex")
    m, s = 1, 1
    while s < n:
        m += 1
        s = s * 2 * m // (m - 1) if m % 2 else s * 2 * m // (m + 2)
    return m


def _clique_sets(k: int) -> list[frozenset]:
    m = clique_overlap_number(k)
    width = (m + 2) // 2
    return [frozenset(c) for c in itertools.islice(itertools.combinations(range(m), width), k)]


def clique_representation(n: int) -> SizedRepresentation:
    rep = Representation(tuple(_clique_sets(n)))
    return SizedRepresentation(rep, clique_overlap_number(n), ClassKind.CLIQUE)


def kpartite_representation(part_sizes: Sequence[int]) -> SizedRepresentation:
    """Every vertex of part ``i`` gets the ``i``-th clique set.  Parts take
    consecutive vertex ids in the given order."""
    if not part_sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in part_sizes):
        raise ValueError("every part needs at least one vertex")
    sets = _clique_sets(len(part_sizes))
    rep = Representation(tuple(sets[i] for i, s in enumerate(part_sizes) for _ in range(s)))
    return SizedRepresentation(rep, clique_overlap_number(len(part_sizes)),
                               ClassKind.COMPLETE_MULTIPARTITE)


def multipartite_representation_on(parts: Sequence[Sequence[int]], n: int) -> Representation:
    """Same construction, but with arbitrary vertex ids per part."""
    sets = _clique_sets(len(parts))
    return place({v: sets[i] for i, p in enumerate(parts) for v in p}, n)


def path_representation(n: int) -> SizedRepresentation:
    """P_n with vertices ``0..n-1`` in path order; ``n >= 3``."""
    if n < 3:
        raise ValueError("path construction needs n >= 3; use clique_representation(2) for P_2")
    sets = [frozenset({i, i + 1}) for i in range(n - 1)]
    sets.append(frozenset(range(n - 1)))
    return SizedRepresentation(Representation(tuple(sets)), n, ClassKind.PATH)


def cycle_representation(n: int) -> SizedRepresentation:
    """C_n with vertices ``0..n-1`` in cyclic order; ``n >= 4``."""
    if n < 4:
        raise ValueError("cycle construction needs n >= 4; C_3 is K_3")
    sets = [frozenset({i, i + 1}) for i in range(n - 2)]
    sets.append(frozenset(range(n - 2)))
    sets.append(frozenset(range(1, n - 1)))
    return SizedRepresentation(Representation(tuple(sets)), n - 1, ClassKind.CYCLE)


def caterpillar_representation(spine: Sequence[int], leaves: Sequence[Sequence[int]],
                               g: Graph | None = None) -> SizedRepresentation:
    """Minimum representation of a caterpillar.

    ``spine`` lists the non-leaf vertices in path order and ``leaves[i]``
    the leaves hanging off ``spine[i]``; together they must cover
    ``0..n-1``.  If ``g`` is given it is checked to be exactly that
    caterpillar.
    """
    k = len(spine)
    if k < 1:
        raise ValueError("spine must contain at least one vertex")
    if len(leaves) != k:
        raise ValueError("need one leaf list per spine vertex")
    if k == 1 and len(leaves[0]) < 2:
        raise ValueError("a one-vertex spine needs at least two leaves")
    if k > 1 and (not leaves[0] or not leaves[-1]):
        raise ValueError("spine ends need leaves, otherwise they are leaves themselves")
    assigned = {}
    for i, s in enumerate(spine):
        assigned[s] = frozenset({i + 1, i + 2})
        for leaf in leaves[i]:
            assigned[leaf] = frozenset(range(i + 2))
    n = len(assigned)
    if n != k + sum(len(lv) for lv in leaves):
        raise ValueError("a vertex appears twice among spine and leaves")
    if g is not None:
        _check_caterpillar(g, spine, leaves)
    rep = place(assigned, n)
    return SizedRepresentation(rep, k + 2, ClassKind.CATERPILLAR)


def _check_caterpillar(g: Graph, spine, leaves):
    for a, b in zip(spine, spine[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"spine is not a path: {a} and {b} are not adjacent")
    for i, lv in enumerate(leaves):
        for leaf in lv:
            if g.degree(leaf) != 1:
                raise ValueError(f"leaf {leaf} has degree {g.degree(leaf)}")
            if not g.has_edge(leaf, spine[i]):
                raise ValueError(f"leaf {leaf} is not attached to spine vertex {spine[i]}")
    if g.m != g.n - 1:
        raise ValueError("graph is not a tree")


def compose_components(reps: Sequence[SizedRepresentation],
                       parts: Sequence[Sequence[int]] | None = None) -> SizedRepresentation:
    """Chain component representations by containment.

    Component ``i+1`` gives up one element (the smallest element of the set
    on its lowest vertex), which is replaced by every element used so far.
    Without ``parts`` the components are laid out consecutively as in
    :func:`overlapnum.graph.disjoint_union`; otherwise ``parts[i]`` lists
    the (sorted) vertex ids of component ``i``.
    """
    if not reps:
        raise ValueError("need at least one component")
    if parts is None:
        parts, off = [], 0
        for sr in reps:
            parts.append(range(off, off + sr.representation.n))
            off += sr.representation.n
    if len(parts) != len(reps):
        raise ValueError("one vertex list per component is required")
    n = sum(len(p) for p in parts)
    out = {}
    used = frozenset()
    nxt = 0
    for idx, (sr, vs) in enumerate(zip(reps, parts)):
        rep = sr.representation
        shift = {e: nxt + i for i, e in enumerate(sorted(rep.universe))}
        nxt += len(shift)
        sets = [frozenset(shift[e] for e in s) for s in rep.sets]
        if idx > 0:
            pick = min(sets[0])
            sets = [(s - {pick}) | used if pick in s else s for s in sets]
        for v, s in zip(vs, sets):
            out[v] = s
        used = used.union(*sets)
    total = sum(sr.claimed_size for sr in reps) - (len(reps) - 1)
    composed = place(out, n)
    # keep the element ids dense
    dense = {e: i for i, e in enumerate(sorted(composed.universe))}
    composed = Representation(tuple(frozenset(dense[e] for e in s) for s in composed.sets))
    return SizedRepresentation(composed, total, ClassKind.DISCONNECTED)


# -- generic upper bound ------------------------------------------------------

def greedy_clique_cover(g: Graph) -> list[frozenset]:
    """Each still-uncovered edge (in sorted order) grown into a maximal clique."""
    covered = set()
    cover = []
    for u, v in g.sorted_edges():
        if (u, v) in covered:
            continue
        clique = [u, v]
        for w in range(g.n):
            if w not in clique and all(g.has_edge(w, c) for c in clique):
                clique.append(w)
        cover.append(frozenset(clique))
        for a, b in itertools.combinations(sorted(clique), 2):
            covered.add((a, b))
    return cover


def edge_triangle_cover(g: Graph) -> list[frozenset]:
    """Cover by edges and triangles with at most floor(n^2/4) members.

    Peels off an adjacent pair ``u, v``: the pair plus each common
    neighbour forms a triangle, other edges at ``u`` or ``v`` are kept
    singly, and ``uv`` itself is added only when no triangle covers it.
    """
    alive = set(g.vertices)
    cover = []
    while True:
        pair = next(((u, v) for u, v in g.sorted_edges() if u in alive and v in alive), None)
        if pair is None:
            return cover
        u, v = pair
        alive -= {u, v}
        tri = False
        for w in sorted(alive):
            au, av = g.has_edge(u, w), g.has_edge(v, w)
            if au and av:
                cover.append(frozenset({u, v, w}))
                tri = True
            elif au:
                cover.append(frozenset({u, w}))
            elif av:
                cover.append(frozenset({v, w}))
        if not tri:
            cover.append(frozenset({u, v}))


def intersection_sets_from_cover(n: int, cover: Sequence[frozenset]) -> list[frozenset]:
    sets = [set() for _ in range(n)]
    for i, c in enumerate(cover):
        for v in c:
            sets[v].add(i)
    return [frozenset(s) for s in sets]


def ecc_overlap_representation(g: Graph) -> SizedRepresentation:
    """Intersection representation from an edge-clique cover, plus one
    private element per vertex so that intersecting sets overlap."""
    cover = greedy_clique_cover(g)
    if len(cover) > g.n * g.n // 4:
        cover = edge_triangle_cover(g)
    base = intersection_sets_from_cover(g.n, cover)
    c = len(cover)
    rep = Representation(tuple(s | {c + v} for v, s in enumerate(base)))
    return SizedRepresentation(rep, c + g.n, ClassKind.OTHER)


# -- numeric bounds -----------------------------------------------------------

def binomial_lower_bound(n: int, k: int) -> float:
    """Stirling-type lower bound on C(n, k) for ``1 <= k < n``."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    return math.sqrt(1.0 / (8 * math.pi * k)) * (n / k) ** k * (n / (n - k)) ** (n - k)


def clique_overlap_numbers(ns) -> np.ndarray:
    """Vectorised :func:`clique_overlap_number` over an integer array."""
    ns = np.asarray(ns, dtype=np.int64)
    if ns.size and ns.min() < 1:
        raise ValueError("clique sizes must be >= 1")
    top = int(ns.max()) if ns.size else 1
    vals = [1]
    while vals[-1] < top:
        vals = milner_s1_values(len(vals) + 1)
    # first m (1-based) with S(1,m) >= n
    return np.searchsorted(np.array(vals, dtype=np.int64), ns, side="left") + 1


def clique_log_bracket(n_max: int = 10**6) -> tuple[bool, int | None]:
    """Check ``log2 n < phi(K_n) <= log2 n + log2(log2 n + 1) + 3`` for
    ``2 <= n <= n_max``.  Returns ``(holds, first failing n or None)``."""
    ns = np.arange(2, n_max + 1, dtype=np.int64)
    phi = clique_overlap_numbers(ns)
    lg = np.log2(ns)
    ok = (lg < phi) & (phi <= lg + np.log2(lg + 1) + 3)
    if ok.all():
        return True, None
    return False, int(ns[np.argmin(ok)])


def classify_value(cls: GraphClass) -> int | None:
    """Closed-form overlap number for a classified connected graph, if known."""
    k = cls.kind
    if k is ClassKind.SINGLE_VERTEX:
        return 1
    if k is ClassKind.CLIQUE:
        return clique_overlap_number(cls.n)
    if k is ClassKind.COMPLETE_MULTIPARTITE:
        return clique_overlap_number(len(cls.parts))
    if k is ClassKind.PATH:
        return cls.n
    if k is ClassKind.CYCLE:
        return cls.n - 1
    if k is ClassKind.CATERPILLAR:
        return len(cls.spine) + 2
    return None


def verified(g: Graph, sr: SizedRepresentation) -> SizedRepresentation:
    report = verify(g, sr.representation)
    if not report.valid:
        raise AssertionError(f"construction failed verification: {report.violations[:3]}")
    return sr

