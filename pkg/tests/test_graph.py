import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from overlapnum.graph import (ClassKind, Graph, add_pendants, caterpillar_graph, classify,
                              complete_graph, complete_multipartite_graph, components,
                              cycle_graph, disjoint_union, empty_graph, induced_subgraph,
                              path_graph, star_graph, vertex_multiply)

from conftest import atlas, to_nx


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_components_examples():
    assert components(Graph.from_edges(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]
    assert components(path_graph(3)) == [[0, 1, 2]]
    assert components(empty_graph(3)) == [[0], [1], [2]]


@given(graphs())
def test_components_partition_and_cover_edges(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    assert sorted(map(sorted, nx.connected_components(to_nx(g)))) == sorted(comps)
    recovered = set()
    for c in comps:
        h, old = induced_subgraph(g, c)
        recovered |= {(old[u], old[v]) for u, v in h.edges}
    assert recovered == set(g.edges)


def test_induced_subgraph_examples():
    h, old = induced_subgraph(path_graph(4), [0, 1, 2])
    assert h == path_graph(3) and old == [0, 1, 2]
    h, _ = induced_subgraph(cycle_graph(4), [1, 2, 3])
    assert h == path_graph(3)
    g = cycle_graph(5)
    h, old = induced_subgraph(g, range(5))
    assert h == g and old == list(range(5))
    with pytest.raises(ValueError):
        induced_subgraph(g, [7])


def test_classify_examples():
    star = classify(star_graph(3))
    assert star.kind is ClassKind.CATERPILLAR and star.spine == (0,)
    c4 = classify(cycle_graph(4))
    assert c4.kind is ClassKind.COMPLETE_MULTIPARTITE and c4.part_sizes == (2, 2)
    p5 = classify(path_graph(5))
    assert p5.kind is ClassKind.PATH and p5.n == 5


def test_c4_is_complete_bipartite_by_enumeration():
    g = cycle_graph(4)
    # every pair from different sides adjacent, none within a side
    for u, v in itertools.combinations(range(4), 2):
        assert g.has_edge(u, v) == ((u % 2) != (v % 2))


@pytest.mark.parametrize("g,kind", [
    (empty_graph(1), ClassKind.SINGLE_VERTEX),
    (complete_graph(2), ClassKind.CLIQUE),
    (complete_graph(3), ClassKind.CLIQUE),
    (cycle_graph(3), ClassKind.CLIQUE),
    (path_graph(3), ClassKind.PATH),
    (complete_multipartite_graph([1, 2, 2]), ClassKind.COMPLETE_MULTIPARTITE),
    (empty_graph(4), ClassKind.COMPLETE_MULTIPARTITE),
    (caterpillar_graph([1, 0, 2]), ClassKind.CATERPILLAR),
    (disjoint_union([complete_graph(2), complete_graph(1)]), ClassKind.DISCONNECTED),
    (Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]), ClassKind.OTHER),
])
def test_classify_kinds(g, kind):
    assert classify(g).kind is kind


@pytest.mark.parametrize("n", range(5, 12))
def test_classify_paths_and_cycles(n):
    assert classify(path_graph(n)).kind is ClassKind.PATH
    cyc = classify(cycle_graph(n))
    assert cyc.kind is ClassKind.CYCLE
    order = cyc.order
    assert all(cycle_graph(n).has_edge(order[i], order[(i + 1) % n]) for i in range(n))


def test_caterpillar_spine_induces_path_and_leaves_match():
    for g in atlas(7, 3):
        cls = classify(g)
        if cls.kind is not ClassKind.CATERPILLAR:
            continue
        h = to_nx(g)
        assert nx.is_tree(h)
        assert set(cls.spine) == {v for v in range(g.n) if g.degree(v) > 1}
        assert all(g.has_edge(a, b) for a, b in zip(cls.spine, cls.spine[1:]))
        assert sum(map(len, cls.leaves)) + len(cls.spine) == g.n


def test_classify_multipartite_parts_sum_to_n():
    for g in atlas(6, 2):
        cls = classify(g)
        if cls.kind is ClassKind.COMPLETE_MULTIPARTITE:
            assert sum(cls.part_sizes) == g.n
            comp = nx.complement(to_nx(g))
            assert all(nx.is_isomorphic(comp.subgraph(p), nx.complete_graph(len(p)))
                       for p in cls.parts)


def test_vertex_multiply_examples():
    g, origin = vertex_multiply(complete_graph(2), 0, 2)
    assert classify(g).kind is ClassKind.PATH and origin == [0, 1, 0]
    g, _ = vertex_multiply(cycle_graph(5), 2, 1)
    assert g == cycle_graph(5)
    g = complete_graph(3)
    for v in range(3):
        g, _ = vertex_multiply(g, v, 2)
    assert nx.is_isomorphic(to_nx(g), nx.complete_multipartite_graph(2, 2, 2))
    with pytest.raises(ValueError):
        vertex_multiply(g, 0, 0)


@given(st.lists(st.integers(1, 3), min_size=2, max_size=4), st.integers(0, 20), st.integers(1, 3))
def test_vertex_multiply_keeps_multipartite(parts, pick, t):
    g = complete_multipartite_graph(parts)
    if classify(g).kind is not ClassKind.COMPLETE_MULTIPARTITE:
        return  # stars classify as caterpillars
    h, _ = vertex_multiply(g, pick % g.n, t)
    assert classify(h).kind is ClassKind.COMPLETE_MULTIPARTITE


def test_disjoint_union_examples():
    g = disjoint_union([complete_graph(2), complete_graph(2)])
    assert (g.n, g.m) == (4, 2)
    assert disjoint_union([path_graph(3)]) == path_graph(3)
    g = disjoint_union([complete_graph(3), path_graph(3), empty_graph(1)])
    assert (g.n, g.m) == (7, 5)
    with pytest.raises(ValueError):
        disjoint_union([])


def test_add_pendants_examples():
    assert add_pendants(empty_graph(1)) == complete_graph(2)
    net = add_pendants(complete_graph(3))
    assert net.n == 6 and net.m == 6
    assert sorted(net.degree(v) for v in net.vertices) == [1, 1, 1, 3, 3, 3]
    g = add_pendants(path_graph(2))
    assert g.sorted_edges() == [(0, 1), (0, 2), (1, 3)]
    assert classify(g).order in ((2, 0, 1, 3), (3, 1, 0, 2))


@given(graphs())
def test_add_pendants_counts(g):
    h = add_pendants(g)
    assert h.n == 2 * g.n and h.m == g.m + g.n
    assert min(h.degree(v) for v in h.vertices) >= 1
