from itertools import combinations

import networkx as nx
import pytest
from hypothesis import settings

from doily.generators import planted_doily
from doily.graph import Graph, from_edge_list

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

NET_EDGES = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]


@pytest.fixture
def net() -> Graph:
    return from_edge_list(6, NET_EDGES)


@pytest.fixture
def doily12() -> Graph:
    """C9 on 0..8 with tufts 9-0, 10-3, 11-6."""
    return planted_doily(9, (0, 3, 6))


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def definition_is_doily(G: Graph) -> bool:
    """Doily test straight from the definition, through networkx cycles."""
    H = to_nx(G)
    if G.n < 6:
        return False
    for cyc in nx.simple_cycles(H):
        C = set(cyc)
        if len(C) != G.n - 3 or H.subgraph(C).number_of_edges() != len(C):
            continue
        rest = set(H) - C
        if any(H.has_edge(u, v) for u, v in combinations(rest, 2)):
            continue
        attach = []
        for t in rest:
            nb = set(H[t]) & C
            if len(nb) != 1:
                break
            attach.append(nb.pop())
        else:
            if len(set(attach)) == 3:
                return True
    return False


def definition_contains_doily(G: Graph) -> bool:
    from doily.graph import induced_subgraph

    for k in range(6, G.n + 1):
        for S in combinations(range(G.n), k):
            if definition_is_doily(induced_subgraph(G, S)[0]):
                return True
    return False


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
