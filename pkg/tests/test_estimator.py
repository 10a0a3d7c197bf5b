import networkx as nx
import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from doily import DoilyDetector
from doily.generators import planted_doily
from doily.graph import GraphFormatError
from doily.validation import check_graph, check_graphs

from conftest import NET_EDGES


def test_params_roundtrip():
    est = DoilyDetector(small_size=9)
    assert est.get_params() == {"small_size": 9, "threads": 1}
    other = clone(est).set_params(threads=2)
    assert other.threads == 2 and est.threads == 1


def test_predict_mixed_inputs():
    graphs = [
        (6, NET_EDGES),
        nx.cycle_graph(7),
        planted_doily(9, (0, 3, 6)),
        np.zeros((4, 4), dtype=int),
    ]
    est = DoilyDetector()
    assert est.fit_predict(graphs).tolist() == [True, False, True, False]
    outs = est.transform(graphs[:1])
    assert outs[0].certificate.size == 6
    assert est.detect(graphs[2]).found


def test_unfitted_and_bad_params():
    with pytest.raises(NotFittedError):
        DoilyDetector().predict([(6, NET_EDGES)])
    with pytest.raises(ValueError):
        DoilyDetector(small_size=5).fit()
    with pytest.raises(ValueError):
        DoilyDetector(threads=0).fit()


def test_check_graph_variants():
    H = nx.Graph([("b", "a"), ("a", "c")])
    G = check_graph(H)
    assert G.edges() == [(0, 1), (0, 2)]
    assert check_graph(np.array([[0, 1], [1, 0]])).m == 1
    for bad in (np.array([[0, 2], [2, 0]]), np.array([[0, 1], [0, 0]]), np.eye(2, dtype=int),
                np.zeros((2, 3)), nx.DiGraph([(0, 1)]), "graph"):
        with pytest.raises(GraphFormatError):
            check_graph(bad)
    with pytest.raises(TypeError):
        check_graphs(H)
