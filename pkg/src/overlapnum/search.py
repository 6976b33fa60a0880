"""Brute-force oracles.

Overlap and containment-free overlap numbers are found by backtracking
over bitmask sets with forward checking: after a vertex is assigned, the
candidate domain of every unassigned vertex is intersected with the masks
compatible with the new set.  Element labels are interchangeable, so only
assignments whose elements first appear in increasing order along the
search order are explored.

Intersection numbers (minimum edge-clique covers) use branch and bound
over maximal cliques.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .closed_forms import greedy_clique_cover, intersection_sets_from_cover
from .graph import Graph
from .representation import (Representation, canonicalize, comparable, overlaps,
                             verify, verify_containment)

DEFAULT_NODE_LIMIT = 10**9


class Status(enum.Enum):
    EXACT = "exact"
    EXCEEDED_BUDGET = "exceeded-budget"


@dataclass(frozen=True)
class SearchBudget:
    max_universe: int | None = None  # None: the floor(n^2/4) + n bound
    node_limit: int = DEFAULT_NODE_LIMIT

    def __post_init__(self):
        if self.max_universe is not None and self.max_universe < 1:
            raise ValueError("max_universe must be at least 1")
        if self.node_limit < 1:
            raise ValueError("node_limit must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    value: int | None
    witness: Representation | None
    status: Status
    nodes: int = 0
    cover: tuple[frozenset, ...] | None = None

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT


class _OutOfNodes(Exception):
    pass


# -- compatibility tables -----------------------------------------------------

def _rows_to_bitsets(table: np.ndarray) -> tuple[int, ...]:
    packed = np.packbits(table, axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)


MAX_TABLE_UNIVERSE = 16


@lru_cache(maxsize=16)
def _tables(m: int, mode: str):
    """Per-mask bitsets of compatible partner masks.

    ``adj[s]`` has bit ``t`` set iff mask ``t`` may sit on a neighbour of a
    vertex holding ``s``; ``non[s]`` likewise for non-neighbours.  Mask 0
    is never allowed.
    """
    if mode not in ("overlap", "cf"):
        raise ValueError(mode)
    a = np.arange(1 << m, dtype=np.int32)
    adj, non = [], []
    for lo in range(0, 1 << m, 1024):
        rows = a[lo:lo + 1024, None]
        inter = rows & a[None, :]
        nonzero = (rows != 0) & (a != 0)[None, :]
        ov = (inter != 0) & (inter != rows) & (inter != a[None, :]) & nonzero
        adj.extend(_rows_to_bitsets(ov))
        if mode == "overlap":
            non.extend(_rows_to_bitsets(nonzero & ~ov))
        else:
            non.extend(_rows_to_bitsets(nonzero & (inter == 0)))
    return tuple(adj), tuple(non)


@lru_cache(maxsize=32)
def _symmetry_masks(m: int) -> tuple[int, ...]:
    """``sym[k]``: masks whose elements >= k are exactly k, k+1, ..., k+j-1."""
    out = []
    for k in range(m + 1):
        bits = 0
        for t in range(1, 1 << m):
            hi = t >> k
            if hi & (hi + 1) == 0:
                bits |= 1 << t
        out.append(bits)
    return tuple(out)


def search_order(g: Graph) -> list[int]:
    return sorted(g.vertices, key=lambda v: (-g.degree(v), v))


def _assign(g: Graph, m: int, mode: str, counter: list, limit: int):
    adj_ok, non_ok = _tables(m, mode)
    sym = _symmetry_masks(m)
    order = search_order(g)
    n = g.n
    full = ((1 << (1 << m)) - 1) & ~1
    pos = {v: i for i, v in enumerate(order)}
    # adjacency in search order
    adjm = [[g.has_edge(order[i], order[j]) for j in range(n)] for i in range(n)]
    chosen = [0] * n

    def dfs(i, k, domains):
        if i == n:
            return True
        cand = domains[i] & sym[k]
        row = adjm[i]
        while cand:
            low = cand & -cand
            cand ^= low
            t = low.bit_length() - 1
            counter[0] += 1
            if counter[0] > limit:
                raise _OutOfNodes
            a_t, n_t = adj_ok[t], non_ok[t]
            nxt = domains[:]
            for j in range(i + 1, n):
                d = nxt[j] & (a_t if row[j] else n_t)
                if not d:
                    break
                nxt[j] = d
            else:
                chosen[i] = t
                if dfs(i + 1, max(k, t.bit_length()), nxt):
                    return True
        return False

    if not dfs(0, 0, [full] * n):
        return None
    sets = [None] * n
    for v, i in pos.items():
        t = chosen[i]
        sets[v] = frozenset(e for e in range(m) if t >> e & 1)
    return Representation(tuple(sets))


def _exact(g: Graph, budget: SearchBudget, mode: str) -> SearchOutcome:
    if budget is None:
        budget = SearchBudget()
    if g.n == 0:
        raise ValueError("graph has no vertices")
    cap = g.n * g.n // 4 + g.n
    # an edge-clique cover plus a private element per vertex is containment
    # free, so the cap bounds both modes
    top = cap if budget.max_universe is None else min(cap, budget.max_universe)
    start = 3 if g.m else 1
    counter = [0]
    try:
        for m in range(start, top + 1):
            if m > MAX_TABLE_UNIVERSE:
                break
            rep = _assign(g, m, mode, counter, budget.node_limit)
            if rep is not None:
                rep = canonicalize(rep)
                assert verify(g, rep).valid
                return SearchOutcome(m, rep, Status.EXACT, counter[0])
    except _OutOfNodes:
        pass
    return SearchOutcome(None, None, Status.EXCEEDED_BUDGET, counter[0])


def overlap_number_exact(g: Graph, budget: SearchBudget | None = None) -> SearchOutcome:
    return _exact(g, budget, "overlap")


def cf_overlap_number_exact(g: Graph, budget: SearchBudget | None = None) -> SearchOutcome:
    """Minimum overlap representation in which no two sets are nested or equal."""
    return _exact(g, budget, "cf")


# -- intersection number --------------------------------------------------

def maximal_cliques(g: Graph) -> list[frozenset]:
    """Bron-Kerbosch with pivoting on vertex bitmasks; sorted output."""
    nb = g.adj_mask
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(v for v in range(g.n) if r >> v & 1))
            return
        pu = p | x
        pivot = max((v for v in range(g.n) if pu >> v & 1), key=lambda v: bin(p & nb[v]).count("1"))
        rest = p & ~nb[pivot]
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            expand(r | low, p & nb[v], x & nb[v])
            p &= ~low
            x |= low
            rest ^= low

    expand(0, (1 << g.n) - 1, 0)
    return sorted(out, key=lambda c: sorted(c))


def intersection_number_exact(g: Graph, budget: SearchBudget | None = None) -> SearchOutcome:
    """Minimum edge-clique cover size.  ``max_universe`` caps the cover size."""
    if budget is None:
        budget = SearchBudget()
    if g.m == 0:
        return SearchOutcome(0, _cover_witness(g, []), Status.EXACT, 0, ())
    cliques = [c for c in maximal_cliques(g) if len(c) > 1]
    edge_idx = {e: i for i, e in enumerate(g.sorted_edges())}
    masks = []
    for c in cliques:
        bits = 0
        for a, b in itertools.combinations(sorted(c), 2):
            bits |= 1 << edge_idx[(a, b)]
        masks.append(bits)
    by_edge = [[ci for ci, mk in enumerate(masks) if mk >> e & 1] for e in range(len(edge_idx))]
    # largest number of edges any single clique covers, for the counting bound
    widest = max(bin(mk).count("1") for mk in masks)
    all_edges = (1 << len(edge_idx)) - 1

    index = {c: i for i, c in enumerate(cliques)}
    best = [[index[c] for c in greedy_clique_cover(g)]]
    counter = [0]

    def dfs(covered, picked):
        counter[0] += 1
        if counter[0] > budget.node_limit:
            raise _OutOfNodes
        if covered == all_edges:
            if len(picked) < len(best[0]):
                best[0] = list(picked)
            return
        rest = all_edges & ~covered
        if len(picked) + -(-bin(rest).count("1") // widest) >= len(best[0]):
            return
        e = (rest & -rest).bit_length() - 1
        for ci in by_edge[e]:
            picked.append(ci)
            dfs(covered | masks[ci], picked)
            picked.pop()

    try:
        dfs(0, [])
    except _OutOfNodes:
        return SearchOutcome(None, None, Status.EXCEEDED_BUDGET, counter[0])
    cover = tuple(sorted((cliques[ci] for ci in best[0]), key=lambda c: sorted(c)))
    if budget.max_universe is not None and len(cover) > budget.max_universe:
        return SearchOutcome(None, None, Status.EXCEEDED_BUDGET, counter[0])
    return SearchOutcome(len(cover), _cover_witness(g, cover), Status.EXACT, counter[0], cover)


def _cover_witness(g: Graph, cover) -> Representation | None:
    sets = intersection_sets_from_cover(g.n, cover)
    if any(not s for s in sets):
        return None  # isolated vertices have empty intersection sets
    return Representation(tuple(sets))


# -- extension problems --------------------------------------------------------

def _subsets(universe):
    items = sorted(universe)
    for k in range(len(items) + 1):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)


def overlap_extension_solve(g: Graph, r: Representation, a) -> frozenset | None:
    """First ``S`` (by size, then lexicographically; the empty set included)
    drawn from the universe of ``r`` that overlaps ``S_v`` exactly for ``v`` in ``a``."""
    if not verify(g, r).valid:
        raise ValueError("representation is not valid for this graph")
    a = set(a)
    if not a <= set(g.vertices):
        raise ValueError("target vertices outside the graph")
    want = [v in a for v in g.vertices]
    for s in _subsets(r.universe):
        if all(overlaps(s, r[v]) == want[v] for v in g.vertices):
            return s
    return None


def containment_extension_solve(g: Graph, r: Representation, a) -> frozenset | None:
    """First nonempty ``S`` over the universe of ``r`` that is nested with
    ``S_v`` (either way, equality included) exactly for ``v`` in ``a``."""
    if verify_containment(g, r):
        raise ValueError("representation is not a containment representation of this graph")
    a = set(a)
    if not a <= set(g.vertices):
        raise ValueError("target vertices outside the graph")
    want = [v in a for v in g.vertices]
    for s in _subsets(r.universe):
        if s and all(comparable(s, r[v]) == want[v] for v in g.vertices):
            return s
    return None
