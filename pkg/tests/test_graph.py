import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from doily.graph import (
    Graph,
    GraphFormatError,
    bfs_shortest_path,
    connected_components,
    format_edgelist,
    from_edge_list,
    induced_subgraph,
    parse_edgelist,
    parse_graph6,
    read_graph,
)
from doily.generators import cycle_graph, path_graph

from conftest import NET_EDGES, to_nx


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edge_list(n, chosen)


def test_empty_edge_list():
    G = from_edge_list(2, [])
    assert G.n == 2 and G.m == 0


def test_net_degrees(net):
    assert [net.degree(v) for v in range(6)] == [3, 3, 3, 1, 1, 1]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphFormatError):
        from_edge_list(3, edges)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, [[1], []])


def test_induced_subgraph_examples(net):
    tri, mp = induced_subgraph(net, {0, 1, 2})
    assert tri.edges() == [(0, 1), (0, 2), (1, 2)] and mp == {0: 0, 1: 1, 2: 2}
    tufts, _ = induced_subgraph(net, {3, 4, 5})
    assert tufts.n == 3 and tufts.m == 0
    full, ident = induced_subgraph(net, net.vertices())
    assert full == net and ident == {v: v for v in range(6)}


def test_components_examples(net):
    assert connected_components(path_graph(3), {1}) == [frozenset({0}), frozenset({2})]
    assert connected_components(net) == [frozenset(range(6))]
    assert connected_components(net, {0, 1, 2}) == [frozenset({3}), frozenset({4}), frozenset({5})]


def test_bfs_examples():
    C6 = cycle_graph(6)
    assert bfs_shortest_path(C6, 2, 2) == [2]
    assert len(bfs_shortest_path(C6, 0, 3)) - 1 == 3
    assert bfs_shortest_path(C6, 0, 3, {1, 2}) == [0, 5, 4, 3]
    assert bfs_shortest_path(C6, 0, 3, {1, 5}) is None
    with pytest.raises(ValueError):
        bfs_shortest_path(C6, 0, 3, {0})


@given(graphs(), st.data())
def test_bfs_matches_exhaustive_paths(G, data):
    s = data.draw(st.integers(0, G.n - 1))
    t = data.draw(st.integers(0, G.n - 1))
    forbidden = data.draw(st.sets(st.sampled_from(range(G.n)))) - {s, t}
    H = to_nx(G)
    H.remove_nodes_from(forbidden)
    lengths = [len(p) - 1 for p in nx.all_simple_paths(H, s, t)] if s != t else [0]
    path = bfs_shortest_path(G, s, t, forbidden)
    if not lengths:
        assert path is None
        return
    assert len(path) - 1 == min(lengths)
    assert path[0] == s and path[-1] == t and not set(path) & forbidden
    assert all(G.has_edge(u, v) for u, v in zip(path, path[1:]))


@given(graphs(), st.data())
def test_components_partition(G, data):
    removed = data.draw(st.sets(st.sampled_from(range(G.n))))
    comps = connected_components(G, removed)
    union = set().union(*comps) if comps else set()
    assert union == set(range(G.n)) - removed
    assert sum(len(c) for c in comps) == len(union)
    H = to_nx(G)
    H.remove_nodes_from(removed)
    assert sorted(map(sorted, comps)) == sorted(map(sorted, nx.connected_components(H)))


@given(graphs(), st.data())
def test_induced_subgraph_idempotent(G, data):
    S = data.draw(st.sets(st.sampled_from(range(G.n)), min_size=1))
    H, mp = induced_subgraph(G, S)
    H2, mp2 = induced_subgraph(H, H.vertices())
    assert H2 == H and all(mp2[v] == v for v in H.vertices())
    for u, v in H.edges():
        inv = {new: old for old, new in mp.items()}
        assert G.has_edge(inv[u], inv[v])
    assert H.m == to_nx(G).subgraph(S).number_of_edges()


def test_parse_edgelist_roundtrip(net):
    text = format_edgelist(net)
    assert text.splitlines()[0] == "6 6"
    assert parse_edgelist(text) == net
    assert parse_edgelist("# comment\n3 1\n0 2  # trailing\n").edges() == [(0, 2)]


@pytest.mark.parametrize("text", [
    "",
    "3",
    "3 1\n0 0\n",
    "3 2\n0 1\n1 0\n",
    "3 2\n0 1\n",
    "3 1\n0 5\n",
    "3 1\n0 x\n",
])
def test_parse_edgelist_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_edgelist(text)


def test_graph6_matches_networkx():
    H = nx.petersen_graph()
    text = nx.to_graph6_bytes(H, header=False).decode()
    G = parse_graph6(text)
    assert G.n == 10 and set(G.edges()) == {tuple(sorted(e)) for e in H.edges()}
    assert read_graph(text, "graph6") == G
    with pytest.raises(GraphFormatError):
        parse_graph6("!!!")
    with pytest.raises(GraphFormatError):
        read_graph("1 0", "dot")


def test_graph_is_hashable_value(net):
    assert hash(net) == hash(from_edge_list(6, list(reversed(NET_EDGES))))
    assert net != from_edge_list(6, NET_EDGES[:-1])
