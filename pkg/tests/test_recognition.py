import json
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from doily.frames import Frame, frame_of
from doily.generators import cycle_graph, complete_graph, gnp, planted_doily, random_tree
from doily.graph import from_edge_list, induced_subgraph, parse_graph6
from doily.recognition import (
    DoilyCertificate,
    OracleLimitError,
    certificate_for,
    cycle_arc,
    find_doily_upto,
    induced_cycles,
    is_doily,
    is_frame_for,
    oracle_report,
)

from conftest import definition_contains_doily, definition_is_doily, to_nx

GOLDEN = Path(__file__).parent / "golden"


@st.composite
def near_doilies(draw, max_n=10):
    """Bare doilies with a few edges toggled, plus plain random graphs."""
    if draw(st.booleans()):
        L = draw(st.integers(3, max_n - 3))
        pos = draw(st.lists(st.integers(0, L - 1), min_size=3, max_size=3, unique=True))
        G = planted_doily(L, sorted(pos))
        n = G.n
    else:
        n = draw(st.integers(1, max_n))
        G = from_edge_list(n, [])
    edges = set(G.edges())
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for e in draw(st.lists(st.sampled_from(pairs), max_size=4) if pairs else st.just([])):
        edges ^= {e}
    perm = draw(st.permutations(range(n)))
    return from_edge_list(n, [(perm[u], perm[v]) for u, v in edges])


def test_net_is_doily(net):
    K = is_doily(net)
    assert K is not None and sorted(K.cycle) == [0, 1, 2] and set(K.tufts) == {3, 4, 5}


def test_cycle_alone_is_not_doily():
    assert is_doily(cycle_graph(9)) is None


def test_c6_with_pendants():
    G = from_edge_list(9, [(k, (k + 1) % 6) for k in range(6)] + [(6, 0), (7, 2), (8, 4)])
    K = is_doily(G)
    assert K is not None and len(K.cycle) == 6
    assert dict(zip(K.tufts, K.attach)) == {6: 0, 7: 2, 8: 4}


@given(near_doilies())
def test_is_doily_matches_definition(G):
    K = is_doily(G)
    assert (K is not None) == definition_is_doily(G)
    if K is not None:
        assert K.vertices == tuple(range(G.n))


@given(near_doilies())
def test_certificates_are_well_formed(G):
    K = is_doily(G)
    if K is None:
        return
    H = to_nx(G)
    cyc = list(K.cycle)
    assert H.subgraph(cyc).number_of_edges() == len(cyc)
    assert all(H.has_edge(u, v) for u, v in zip(cyc, cyc[1:] + cyc[:1]))
    for b, a in zip(K.tufts, K.attach):
        assert set(H[b]) == {a}
    assert K.path(0)[0] == K.attach[1] and K.path(0)[-1] == K.attach[2]


def test_find_small_examples(net, doily12):
    assert find_doily_upto(net, 8).size == 6
    assert find_doily_upto(complete_graph(4), 8) is None
    assert find_doily_upto(doily12, 8) is None
    assert find_doily_upto(doily12, 12).size == 12


@pytest.mark.parametrize("seed", range(40))
def test_find_small_agrees_with_subsets_and_oracle(seed):
    n = 6 + seed % 5
    G = gnp(n, (0.2, 0.35, 0.5)[seed % 3], seed)
    by_cycles = find_doily_upto(G, 8)
    by_subsets = find_doily_upto(G, 8, method="subsets")
    report = oracle_report(G)
    expect = report.exists and report.min_size <= 8
    assert (by_cycles is not None) == (by_subsets is not None) == expect
    if by_cycles is not None:
        assert by_cycles.size == by_subsets.size == report.min_size
        assert certificate_for(G, by_cycles.vertices) is not None


@pytest.mark.parametrize("seed", range(12))
def test_oracle_matches_definition(seed):
    G = gnp(8, 0.35, 100 + seed)
    assert oracle_report(G).exists == definition_contains_doily(G)


def test_induced_cycles_match_networkx():
    G = gnp(9, 0.4, 11)
    H = to_nx(G)
    ours = {frozenset(c) for c in induced_cycles(G, G.n)}
    theirs = {frozenset(c) for c in nx.simple_cycles(H)
              if len(c) >= 3 and H.subgraph(c).number_of_edges() == len(c)}
    assert ours == theirs


def test_oracle_examples(net, doily12):
    r = oracle_report(net)
    assert r.exists and r.min_size == 6
    assert not oracle_report(random_tree(12, 3)).exists
    assert not oracle_report(cycle_graph(9)).exists
    full = oracle_report(doily12, enumerate_all_min=True)
    assert full.min_size == 12 and len(full.all_min_doilies) == 1
    with pytest.raises(OracleLimitError):
        oracle_report(from_edge_list(30, []))


def test_petersen_golden():
    golden = json.loads((GOLDEN / "petersen_oracle.json").read_text())
    G = parse_graph6(golden["graph6"])
    assert oracle_report(G, enumerate_all_min=True).to_json() == golden["report"]
    assert definition_contains_doily(G) == golden["report"]["exists"]


def test_is_frame_for_examples(net, doily12):
    K = certificate_for(net, net.vertices())
    assert is_frame_for(net, K, frame_of(K))
    K12 = certificate_for(doily12, doily12.vertices())
    F = frame_of(K12)
    assert is_frame_for(doily12, K12, F)
    outside_tuft = Frame((99,) + F.b[1:], F.a, F.a_prime, F.a_dprime)
    assert not is_frame_for(doily12, K12, outside_tuft)
    swapped = Frame(F.b, F.a, F.a_dprime, F.a_prime)
    assert not is_frame_for(doily12, K12, swapped)


def test_cycle_arc():
    cyc = tuple(range(9))
    assert cycle_arc(cyc, 6, 3, 0) == [6, 5, 4, 3]
    assert cycle_arc(cyc, 6, 3, 4) == [6, 7, 8, 0, 1, 2, 3]
    assert cycle_arc(cyc, 6, 3, 42) is None


def test_certificate_json_roundtrip(doily12):
    K = certificate_for(doily12, doily12.vertices())
    data = K.to_json()
    assert json.loads(json.dumps(data)) == data
    back = DoilyCertificate.from_json(data)
    assert back == K and back.to_json() == data
    reflected = dict(data, cycle=[data["cycle"][0]] + data["cycle"][:0:-1])
    assert DoilyCertificate.from_json(reflected).canonical() == K.canonical()


def test_canonical_form_is_relabel_invariant(doily12):
    K = certificate_for(doily12, doily12.vertices())
    perm = [5, 0, 7, 2, 9, 11, 1, 3, 10, 4, 8, 6]
    H = from_edge_list(12, [(perm[u], perm[v]) for u, v in doily12.edges()])
    assert certificate_for(H, H.vertices()).canonical() == K.relabel(perm).canonical()
    c = K.canonical()
    assert c.cycle[0] == min(c.cycle) and c.tufts[0] == min(c.tufts)


def test_certificate_validation():
    with pytest.raises(ValueError):
        DoilyCertificate((0, 1, 2), (0, 2, 1), (3, 4, 5))
    with pytest.raises(ValueError):
        DoilyCertificate((0, 1, 2), (0, 1, 2), (3, 3, 5))
    sub, _ = induced_subgraph(planted_doily(5, (0, 1, 3)), range(7))
    assert certificate_for(sub, sub.vertices()) is None
