import itertools

import networkx as nx
import pytest

from overlapnum.graph import Graph
from overlapnum.representation import Representation


def from_nx(h) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), frozenset(tuple(sorted(e)) for e in h.edges()))


def to_nx(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def atlas(max_n: int, min_n: int = 1):
    """All graphs on min_n..max_n vertices, one per isomorphism class."""
    return [from_nx(h) for h in nx.graph_atlas_g()
            if min_n <= h.number_of_nodes() <= max_n]


def all_representations(n: int, m: int):
    """Every assignment of nonempty subsets of range(m) to n vertices."""
    subsets = [frozenset(c) for k in range(1, m + 1) for c in itertools.combinations(range(m), k)]
    for combo in itertools.product(subsets, repeat=n):
        yield Representation(combo)


@pytest.fixture
def p3_rep():
    return Representation.of({1, 2}, {2, 3}, {1, 2})


@pytest.fixture
def p5_rep():
    return Representation.of({1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 2, 3, 4})


# acceptance lines collected by tests/test_acceptance.py, echoed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
