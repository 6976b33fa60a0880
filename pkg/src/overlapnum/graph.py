"""Simple undirected graphs on dense integer vertex ids, plus the structural
constructions used by the overlap-number machinery.

Vertices are ``0..n-1``.  Edges are stored as sorted pairs ``(u, v)`` with
``u < v``.  Derived graphs (induced subgraphs, multiplied vertices) come
back with a relabeling map so representations can be translated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in s) for s in self.adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# -- named graphs -----------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)))


def complete_multipartite_graph(part_sizes: Sequence[int]) -> Graph:
    """Parts occupy consecutive vertex ids in the given order."""
    if any(s < 1 for s in part_sizes):
        raise ValueError("every part needs at least one vertex")
    part_of = [i for i, s in enumerate(part_sizes) for _ in range(s)]
    n = len(part_of)
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                              if part_of[u] != part_of[v]))


def star_graph(leaves: int) -> Graph:
    """K_{1,t}: centre 0, leaves 1..t."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def caterpillar_graph(leaf_counts: Sequence[int]) -> Graph:
    """Spine vertices 0..k-1 in order, then the leaves of spine vertex 0,
    those of spine vertex 1, and so on."""
    k = len(leaf_counts)
    edges = {(i, i + 1) for i in range(k - 1)}
    nxt = k
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.add((i, nxt))
            nxt += 1
    return Graph(nxt, frozenset(edges))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- structural queries ---------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(h, old_ids)`` where vertex ``i`` of ``h`` is ``old_ids[i]`` in ``g``."""
    old = sorted(set(vs))
    for v in old:
        if not 0 <= v < g.n:
            raise ValueError(f"unknown vertex {v}")
    new_id = {v: i for i, v in enumerate(old)}
    edges = frozenset((new_id[u], new_id[v]) for u, v in g.edges
                      if u in new_id and v in new_id)
    return Graph(len(old), edges), old


def vertex_multiply(g: Graph, v: int, t: int) -> tuple[Graph, list[int]]:
    """Replace ``v`` by ``t`` pairwise nonadjacent twins.

    The copies take ids ``v`` and ``n, n+1, ..., n+t-2``; the returned list
    maps each new vertex to the vertex of ``g`` it came from.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"unknown vertex {v}")
    if t < 1:
        raise ValueError("multiplicity must be at least 1")
    origin = list(range(g.n)) + [v] * (t - 1)
    edges = set(g.edges)
    for c in range(g.n, g.n + t - 1):
        for w in g.adj[v]:
            edges.add((min(c, w), max(c, w)))
    return Graph(g.n + t - 1, frozenset(edges)), origin


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    if not gs:
        raise ValueError("disjoint union of an empty list")
    off = 0
    edges = set()
    for h in gs:
        edges.update((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Graph(off, frozenset(edges))


def add_pendants(g: Graph) -> Graph:
    """Attach a new degree-1 vertex ``i + n`` to every vertex ``i``."""
    return Graph(2 * g.n, g.edges | frozenset((i, i + g.n) for i in range(g.n)))


# -- classification ---------------------------------------------------------

class ClassKind(enum.Enum):
    SINGLE_VERTEX = "single-vertex"
    CLIQUE = "clique"
    COMPLETE_MULTIPARTITE = "complete-multipartite"
    CYCLE = "cycle"
    PATH = "path"
    CATERPILLAR = "caterpillar"
    DISCONNECTED = "disconnected"
    OTHER = "other"


@dataclass(frozen=True)
class GraphClass:
    """Result of :func:`classify`.

    Which payload fields are filled depends on ``kind``: ``parts`` for
    complete multipartite graphs, ``order`` for paths and cycles (vertices
    in traversal order), ``spine``/``leaves`` for caterpillars and
    ``components`` for disconnected graphs.
    """

    kind: ClassKind
    n: int
    parts: tuple[tuple[int, ...], ...] = ()
    order: tuple[int, ...] = ()
    spine: tuple[int, ...] = ()
    leaves: tuple[tuple[int, ...], ...] = ()
    components: tuple[tuple[int, ...], ...] = ()

    @property
    def part_sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


def _multipartite_parts(g: Graph):
    # complete multipartite iff "equal or nonadjacent" is an equivalence relation
    parts = []
    seen = [False] * g.n
    for v in range(g.n):
        if seen[v]:
            continue
        part = [w for w in range(g.n) if w == v or w not in g.adj[v]]
        for w in part:
            if seen[w]:
                return None
            seen[w] = True
        parts.append(tuple(part))
    for p in parts:
        pset = set(p)
        for w in p:
            if g.adj[w] != frozenset(range(g.n)) - pset:
                return None
    return tuple(parts)


def _walk_path(g: Graph, start: int, allowed: set) -> list[int]:
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in g.adj[cur] if w in allowed and w != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _path_order(g: Graph):
    if g.n < 3 or g.m != g.n - 1 or not is_connected(g):
        return None
    if any(g.degree(v) > 2 for v in g.vertices):
        return None
    ends = [v for v in g.vertices if g.degree(v) == 1]
    return tuple(_walk_path(g, min(ends), set(g.vertices)))


def _cycle_order(g: Graph):
    if g.n < 3 or g.m != g.n or not is_connected(g):
        return None
    if any(g.degree(v) != 2 for v in g.vertices):
        return None
    order = [0]
    prev, cur = None, 0
    while True:
        nxt = min(w for w in g.adj[cur] if w != prev)
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > g.n:
            return None
    return tuple(order)


def _caterpillar(g: Graph):
    if g.n < 3 or g.m != g.n - 1 or not is_connected(g):
        return None
    inner = {v for v in g.vertices if g.degree(v) > 1}
    # the non-leaf vertices must induce a path
    if len(inner) == 1:
        spine = [next(iter(inner))]
    else:
        inner_deg = {v: sum(1 for w in g.adj[v] if w in inner) for v in inner}
        if any(d > 2 for d in inner_deg.values()):
            return None
        ends = sorted(v for v, d in inner_deg.items() if d == 1)
        if len(ends) != 2:
            return None
        spine = _walk_path(g, ends[0], inner)
        if len(spine) != len(inner):
            return None
    leaves = tuple(tuple(sorted(w for w in g.adj[s] if w not in inner)) for s in spine)
    return tuple(spine), leaves


def classify(g: Graph) -> GraphClass:
    """Most specific class tag for ``g``.

    Precedence: single vertex, clique, trees (path before caterpillar),
    complete multipartite, cycle, disconnected, other.  Stars therefore
    come out as caterpillars and C_4 as K_{2,2}.
    """
    n = g.n
    if n == 0:
        raise ValueError("the empty graph has no class")
    if n == 1:
        return GraphClass(ClassKind.SINGLE_VERTEX, n)
    if g.m == n * (n - 1) // 2:
        return GraphClass(ClassKind.CLIQUE, n, parts=tuple((v,) for v in range(n)))
    order = _path_order(g)
    if order is not None:
        return GraphClass(ClassKind.PATH, n, order=order)
    cat = _caterpillar(g)
    if cat is not None:
        return GraphClass(ClassKind.CATERPILLAR, n, spine=cat[0], leaves=cat[1])
    parts = _multipartite_parts(g)
    if parts is not None:
        return GraphClass(ClassKind.COMPLETE_MULTIPARTITE, n, parts=parts)
    order = _cycle_order(g)
    if order is not None:
        return GraphClass(ClassKind.CYCLE, n, order=order)
    comps = components(g)
    if len(comps) > 1:
        return GraphClass(ClassKind.DISCONNECTED, n, components=tuple(tuple(c) for c in comps))
    return GraphClass(ClassKind.OTHER, n)
