"""Input coercion shared by the estimator and the CLI."""
from __future__ import annotations

import numpy as np

from .graph import Graph, GraphFormatError, from_edge_list

__all__ = ["check_graph", "check_graphs"]


def check_graph(obj) -> Graph:
    """Coerce ``obj`` to a :class:`Graph`.

    Accepts a ``Graph``, a networkx graph (nodes relabelled ``0..n-1`` in
    sorted order), a square 0/1 adjacency matrix, or an ``(n, edges)`` pair.
    """
    if isinstance(obj, Graph):
        return obj
    if hasattr(obj, "is_directed") and hasattr(obj, "nodes"):
        if obj.is_directed() or obj.is_multigraph():
            raise GraphFormatError("only simple undirected graphs are supported")
        index = {v: i for i, v in enumerate(sorted(obj.nodes()))}
        return from_edge_list(len(index), ((index[u], index[v]) for u, v in obj.edges()))
    if isinstance(obj, tuple) and len(obj) == 2 and isinstance(obj[0], (int, np.integer)):
        return from_edge_list(int(obj[0]), obj[1])
    arr = np.asarray(obj)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise GraphFormatError(f"cannot interpret object of type {type(obj).__name__} as a graph")
    if not np.isin(arr, (0, 1)).all():
        raise GraphFormatError("adjacency matrix must be 0/1")
    if (arr != arr.T).any():
        raise GraphFormatError("adjacency matrix must be symmetric")
    if np.diag(arr).any():
        raise GraphFormatError("adjacency matrix has self-loops")
    rows, cols = np.nonzero(np.triu(arr, 1))
    return from_edge_list(arr.shape[0], zip(rows.tolist(), cols.tolist()))


def check_graphs(X) -> list[Graph]:
    if isinstance(X, Graph) or hasattr(X, "is_directed"):
        raise TypeError("expected a collection of graphs; wrap a single graph in a list")
    return [check_graph(g) for g in X]
