import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from overlapnum.graph import (Graph, complete_graph, empty_graph, induced_subgraph, path_graph)
from overlapnum.representation import (PairRelation, Representation, canonicalize,
                                       check_basic_containment, check_containment_component,
                                       classify_pair, containment_count,
                                       duplicate_for_multiplication, graph_from_representation,
                                       restrict, size, verify, walk_lemma_holds)
from overlapnum.graph import vertex_multiply

small_sets = st.frozensets(st.integers(0, 5), min_size=1, max_size=4)
reps = st.lists(small_sets, min_size=1, max_size=6).map(lambda s: Representation(tuple(s)))


def test_empty_sets_rejected():
    with pytest.raises(ValueError):
        Representation.of({1}, set())
    with pytest.raises(ValueError):
        classify_pair(frozenset(), frozenset({1}))


@pytest.mark.parametrize("a,b,rel", [
    ({1, 2}, {2, 3}, PairRelation.OVERLAP),
    ({1, 2}, {1, 2}, PairRelation.EQUAL),
    ({1}, {1, 2}, PairRelation.LEFT_IN_RIGHT),
    ({1, 2}, {1}, PairRelation.RIGHT_IN_LEFT),
    ({1}, {2}, PairRelation.DISJOINT),
])
def test_classify_pair(a, b, rel):
    assert classify_pair(frozenset(a), frozenset(b)) is rel


@given(small_sets, small_sets)
def test_classify_pair_swap_symmetry(a, b):
    swap = {PairRelation.LEFT_IN_RIGHT: PairRelation.RIGHT_IN_LEFT,
            PairRelation.RIGHT_IN_LEFT: PairRelation.LEFT_IN_RIGHT}
    ab, ba = classify_pair(a, b), classify_pair(b, a)
    assert swap.get(ab, ab) is ba


def test_verify_examples(p3_rep, p5_rep):
    assert verify(path_graph(3), p3_rep).valid
    bad = verify(complete_graph(3), p3_rep)
    assert not bad.valid
    assert [(x.u, x.v, x.relation) for x in bad.violations] == [(0, 2, PairRelation.EQUAL)]
    assert verify(path_graph(5), p5_rep).valid
    with pytest.raises(ValueError):
        verify(path_graph(4), p3_rep)


def test_size_examples(p3_rep, p5_rep):
    assert size(p3_rep) == 3
    assert size(Representation.of({7})) == 1
    assert size(p5_rep) == 5


def test_containment_count_examples(p3_rep, p5_rep):
    assert containment_count(path_graph(3), p3_rep) == 1
    k3 = Representation.of({1, 2}, {1, 3}, {2, 3})
    assert containment_count(complete_graph(3), k3) == 0
    # brute force over pairs: S_5 contains S_1, S_2, S_3 and overlaps S_4
    g = path_graph(5)
    nested = [(u, v) for u, v in itertools.combinations(range(5), 2)
              if not g.has_edge(u, v) and (p5_rep[u] <= p5_rep[v] or p5_rep[v] <= p5_rep[u])]
    assert nested == [(0, 4), (1, 4), (2, 4)]
    assert containment_count(g, p5_rep) == 3
    with pytest.raises(ValueError):
        containment_count(complete_graph(3), p3_rep)


def test_graph_from_representation_examples(p3_rep):
    assert graph_from_representation(p3_rep) == path_graph(3)
    pairs = Representation(tuple(frozenset(c) for c in itertools.combinations([1, 2, 3], 2)))
    assert graph_from_representation(pairs) == complete_graph(3)
    assert graph_from_representation(Representation.of({4}, {4}, {4})) == empty_graph(3)


@given(reps)
def test_graph_from_representation_verifies(r):
    assert verify(graph_from_representation(r), r).valid


def test_restrict_examples(p5_rep):
    g = path_graph(5)
    h, _ = induced_subgraph(g, [1, 2, 3])
    sub = restrict(p5_rep, [1, 2, 3])
    assert h == path_graph(3) and verify(h, sub).valid
    assert restrict(p5_rep, range(5)) == p5_rep
    one = restrict(p5_rep, [4])
    assert one.n == 1 and verify(empty_graph(1), one).valid
    with pytest.raises(ValueError):
        restrict(p5_rep, [])


def test_canonicalize_examples():
    r = canonicalize(Representation.of({9, 4}, {4, 7}, {9, 4}))
    assert r.as_lists() == [[0, 1], [0, 2], [0, 1]]
    assert canonicalize(r) == r
    assert canonicalize(Representation.of({5})).as_lists() == [[0]]


@given(reps)
def test_canonicalize_preserves_relations(r):
    c = canonicalize(r)
    assert canonicalize(c) == c
    assert c.size == r.size
    for u, v in itertools.combinations(range(r.n), 2):
        assert classify_pair(r[u], r[v]) is classify_pair(c[u], c[v])
    g = graph_from_representation(r)
    assert verify(g, c).valid


def test_duplication_under_multiplication(p5_rep):
    g = path_graph(5)
    for v in range(5):
        for t in (1, 2, 3):
            h, origin = vertex_multiply(g, v, t)
            dup = duplicate_for_multiplication(p5_rep, origin)
            assert verify(h, dup).valid and dup.size == p5_rep.size


def test_walk_lemma_exhaustive_small():
    subsets = [frozenset(c) for k in range(1, 4) for c in itertools.combinations(range(3), k)]
    assert all(walk_lemma_holds(a, b, c) for a, b, c in itertools.product(subsets, repeat=3))


def test_containment_component_on_valid(p5_rep):
    assert check_containment_component(path_graph(5), p5_rep) == []
    # v = 4 (the big set): G - N[4] is {0, 1, 2}, all inside S_4
    assert all(p5_rep[w] <= p5_rep[4] for w in (0, 1, 2))


def test_containment_component_reports_violation():
    # P_4 as 0-1-2-3.  S_0 sits inside S_3, but S_1 (same component of
    # G - N[3]) has elements outside S_3.
    g = path_graph(4)
    r = Representation.of({1}, {7, 8}, {2, 9}, {1, 2})
    assert not verify(g, r).valid
    assert check_containment_component(g, r) == [(3, 0, 7)]


def test_containment_component_spec_p4_case():
    g = path_graph(4)
    r = Representation.of({1, 2}, {2, 3}, {3, 4}, {1, 5})
    assert not verify(g, r).valid
    # no nested pair at all, so nothing to report
    nested = [(u, v) for u in range(4) for v in range(4) if u != v and r[u] <= r[v]]
    assert nested == []
    assert check_containment_component(g, r) == []


def test_basic_containment_checker():
    # two P_3 components chained by containment
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    r = Representation.of({0, 1}, {1, 2}, {0, 1}, {0, 1, 2, 3}, {3, 4}, {0, 1, 2, 3})
    assert verify(g, r).valid
    assert check_basic_containment(g, r, [0, 1, 2], [3, 4, 5]) == []
    bad = Representation.of({0, 1}, {1, 2}, {0, 1}, {0, 1, 3}, {3, 4}, {0, 1, 3})
    assert check_basic_containment(g, bad, [0, 1, 2], [3, 4, 5])
    with pytest.raises(ValueError):
        check_basic_containment(g, r, [0, 2], [3, 4, 5])
