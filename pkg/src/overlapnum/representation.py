"""Set representations of graphs.

A :class:`Representation` assigns a nonempty finite set of nonnegative
integer elements to each vertex ``0..n-1``.  Two vertices are adjacent in
the represented graph iff their sets *overlap*: they intersect and neither
contains the other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, components, induced_subgraph


class PairRelation(enum.Enum):
    OVERLAP = "overlap"
    LEFT_IN_RIGHT = "left-in-right"
    RIGHT_IN_LEFT = "right-in-left"
    EQUAL = "equal"
    DISJOINT = "disjoint"

    @property
    def is_containment(self) -> bool:
        return self in (PairRelation.LEFT_IN_RIGHT, PairRelation.RIGHT_IN_LEFT,
                        PairRelation.EQUAL)


@dataclass(frozen=True)
class Representation:
    sets: tuple[frozenset, ...]

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        for v, s in enumerate(sets):
            if not s:
                raise ValueError(f"vertex {v} has an empty set")
            for e in s:
                if not isinstance(e, int) or e < 0:
                    raise ValueError(f"vertex {v}: element {e!r} is not a nonnegative integer")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def of(cls, *sets: Iterable[int]) -> "Representation":
        return cls(tuple(frozenset(s) for s in sets))

    @property
    def n(self) -> int:
        return len(self.sets)

    @property
    def universe(self) -> frozenset:
        return frozenset().union(*self.sets)

    @property
    def size(self) -> int:
        return len(self.universe)

    def __len__(self):
        return len(self.sets)

    def __getitem__(self, v: int) -> frozenset:
        return self.sets[v]

    def __iter__(self):
        return iter(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [sorted(s) for s in self.sets]


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    adjacent: bool
    relation: PairRelation


@dataclass(frozen=True)
class VerifyReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def classify_pair(a: frozenset, b: frozenset) -> PairRelation:
    if not a or not b:
        raise ValueError("classify_pair needs two nonempty sets")
    if a == b:
        return PairRelation.EQUAL
    common = a & b
    if not common:
        return PairRelation.DISJOINT
    if common == a:
        return PairRelation.LEFT_IN_RIGHT
    if common == b:
        return PairRelation.RIGHT_IN_LEFT
    return PairRelation.OVERLAP


def overlaps(a: frozenset, b: frozenset) -> bool:
    common = a & b
    return bool(common) and common != a and common != b


def _check_cover(g: Graph, r: Representation):
    if r.n != g.n:
        raise ValueError(f"representation covers {r.n} vertices, graph has {g.n}")


def verify(g: Graph, r: Representation) -> VerifyReport:
    _check_cover(g, r)
    bad = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            rel = classify_pair(r[u], r[v])
            adj = g.has_edge(u, v)
            if adj != (rel is PairRelation.OVERLAP):
                bad.append(Violation(u, v, adj, rel))
    return VerifyReport(tuple(bad))


def size(r: Representation) -> int:
    return r.size


def containment_count(g: Graph, r: Representation) -> int:
    """Unordered nonadjacent pairs whose sets are nested (equality included)."""
    if not verify(g, r).valid:
        raise ValueError("representation is not valid for this graph")
    return sum(1 for u in range(g.n) for v in range(u + 1, g.n)
               if classify_pair(r[u], r[v]).is_containment)


def graph_from_representation(r: Representation) -> Graph:
    return Graph(r.n, frozenset((u, v) for u in range(r.n) for v in range(u + 1, r.n)
                                if overlaps(r[u], r[v])))


def restrict(r: Representation, vs: Iterable[int]) -> Representation:
    """Sub-collection on ``vs``, renumbered in increasing vertex order to
    match :func:`overlapnum.graph.induced_subgraph`."""
    vs = sorted(set(vs))
    if not vs:
        raise ValueError("cannot restrict to an empty vertex set")
    return Representation(tuple(r[v] for v in vs))


def canonicalize(r: Representation) -> Representation:
    """Relabel elements 0, 1, 2, ... by first appearance (vertices in id
    order, each set ascending)."""
    label = {}
    for s in r.sets:
        for e in sorted(s):
            if e not in label:
                label[e] = len(label)
    return Representation(tuple(frozenset(label[e] for e in s) for s in r.sets))


def relabel_elements(r: Representation, offset: int) -> Representation:
    return Representation(tuple(frozenset(e + offset for e in s) for s in r.sets))


def place(sets_by_vertex: dict, n: int) -> Representation:
    """Build a representation from a ``{vertex: set}`` mapping covering ``0..n-1``."""
    missing = [v for v in range(n) if v not in sets_by_vertex]
    if missing:
        raise ValueError(f"no set assigned to vertices {missing}")
    return Representation(tuple(sets_by_vertex[v] for v in range(n)))


def duplicate_for_multiplication(r: Representation, origin: Sequence[int]) -> Representation:
    """Copy the set of each original vertex onto its twins (``origin`` as
    returned by :func:`overlapnum.graph.vertex_multiply`)."""
    return Representation(tuple(r[o] for o in origin))


# -- structural lemmas as executable checks ---------------------------------

def walk_lemma_holds(a: frozenset, b: frozenset, c: frozenset) -> bool:
    """If A is inside C, A overlaps B and B does not overlap C, then B is inside C."""
    if a <= c and overlaps(a, b) and not overlaps(b, c):
        return b <= c
    return True


def check_basic_containment(g: Graph, r: Representation, xs: Iterable[int],
                            ys: Iterable[int]) -> list[str]:
    """Check the two-component containment constraints for vertex sets X, Y.

    X and Y must each induce a connected subgraph with no edge between
    them.  When some ``S_x`` lies inside some ``S_y``, every ``S_y`` either
    contains the whole union over X or misses it, and (unless both sides
    are single vertices) no ``S_y`` sits inside any ``S_x``.  Returns a
    list of human-readable violations.
    """
    xs, ys = sorted(set(xs)), sorted(set(ys))
    if not xs or not ys:
        raise ValueError("X and Y must be nonempty")
    if set(xs) & set(ys):
        raise ValueError("X and Y must be disjoint")
    for side in (xs, ys):
        if len(components(induced_subgraph(g, side)[0])) != 1:
            raise ValueError(f"{side} does not induce a connected subgraph")
    if any(g.has_edge(x, y) for x in xs for y in ys):
        raise ValueError("an edge joins X and Y")
    if not any(r[x] <= r[y] for x in xs for y in ys):
        return []
    out = []
    ux = frozenset().union(*(r[x] for x in xs))
    for y in ys:
        if not (ux <= r[y] or not (ux & r[y])):
            out.append(f"S_{y} neither contains nor misses the union over X")
    if len(xs) > 1 or len(ys) > 1:
        for x in xs:
            for y in ys:
                if r[y] <= r[x]:
                    out.append(f"S_{y} is contained in S_{x}")
    return out


def check_containment_component(g: Graph, r: Representation) -> list[tuple[int, int, int]]:
    """Triples ``(v, u, e)``: ``S_u`` lies inside ``S_v`` for a vertex ``u``
    outside ``N[v]``, yet element ``e`` of some set in u's component of
    ``G - N[v]`` is missing from ``S_v``.  ``e`` is the smallest such
    element.  Always empty for a valid representation."""
    _check_cover(g, r)
    out = []
    for v in range(g.n):
        rest = [w for w in range(g.n) if w not in g.closed_neighborhood(v)]
        if not rest:
            continue
        h, old = induced_subgraph(g, rest)
        comp_of = {}
        for comp in components(h):
            members = [old[i] for i in comp]
            for w in members:
                comp_of[w] = members
        for u in rest:
            if not r[u] <= r[v]:
                continue
            union = frozenset().union(*(r[w] for w in comp_of[u]))
            missing = union - r[v]
            if missing:
                out.append((v, u, min(missing)))
    return out


# -- containment representations --------------------------------------------

def comparable(a: frozenset, b: frozenset) -> bool:
    return a <= b or b <= a


def verify_containment(g: Graph, r: Representation) -> list[tuple[int, int]]:
    """Pairs breaking "adjacent iff one set strictly contains the other".

    Equal sets on distinct vertices are always a violation.
    """
    _check_cover(g, r)
    bad = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            a, b = r[u], r[v]
            strict = a != b and comparable(a, b)
            if a == b or strict != g.has_edge(u, v):
                bad.append((u, v))
    return bad


def graph_from_containment(r: Representation) -> Graph:
    return Graph(r.n, frozenset((u, v) for u in range(r.n) for v in range(u + 1, r.n)
                                if r[u] != r[v] and comparable(r[u], r[v])))
