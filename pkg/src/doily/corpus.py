"""Fixed, seeded instance families shared by the acceptance suite and tests."""
from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from .graph import Graph
from .generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    gnp,
    net_subdivisions_upto,
    path_graph,
    planted_doily,
    random_tree,
)

Labelled = tuple[str, Graph]

DENSITIES = (0.15, 0.3, 0.5)


def random_corpus(seeds: int = 30, sizes: range = range(6, 12)) -> Iterator[Labelled]:
    for s in range(seeds):
        for n in sizes:
            for p in DENSITIES:
                seed = 1000 * s + 10 * n + round(100 * p)
                yield f"gnp(n={n},p={p},seed={seed})", gnp(n, p, seed)


def planted_corpus(count: int = 200, max_extra: int = 8) -> Iterator[Labelled]:
    """Cycle lengths cycle through 3..10, noise through 0..max_extra."""
    for k in range(count):
        L = 3 + k % 8
        extra = (k // 8) % (max_extra + 1)
        rng = np.random.Generator(np.random.PCG64(k))
        pos = tuple(sorted(rng.choice(L, size=3, replace=False).tolist()))
        p = (0.2, 0.35, 0.5)[k % 3]
        yield f"planted(L={L},pos={pos},extra={extra},p={p},seed={k})", planted_doily(L, pos, extra, p, k)


def subdivision_corpus(max_n: int = 12) -> Iterator[Labelled]:
    for k, G in enumerate(net_subdivisions_upto(max_n)):
        yield f"subdivision#{k}(n={G.n})", G


def negative_corpus(max_tree: int = 15, trees_per_size: int = 4) -> Iterator[Labelled]:
    for n in range(1, 10):
        yield f"K{n}", complete_graph(n)
    for a in range(1, 6):
        for b in range(a, 6):
            yield f"K{a},{b}", complete_bipartite(a, b)
    for n in range(1, max_tree + 1):
        yield f"P{n}", path_graph(n)
    for n in range(3, max_tree + 1):
        yield f"C{n}", cycle_graph(n)
    for n in range(1, max_tree + 1):
        for s in range(trees_per_size):
            yield f"tree(n={n},seed={s})", random_tree(n, s)


def bare_doilies(max_n: int = 16) -> Iterator[tuple[str, Graph, int, tuple[int, int, int]]]:
    """Every bare doily with cycle vertex 0 carrying a tuft, up to ``max_n`` vertices."""
    for L in range(3, max_n - 2):
        for p in range(1, L):
            for q in range(p + 1, L):
                pos = (0, p, q)
                yield f"doily(L={L},pos={pos})", planted_doily(L, pos), L, pos


def harvest_corpus(quick: bool = False) -> Iterator[Labelled]:
    """Graphs on at most 11 vertices used to collect trackable pairs."""
    yield from random_corpus(seeds=3 if quick else 30)
    yield from subdivision_corpus(10 if quick else 11)
    for label, G in planted_corpus(60 if quick else 400, max_extra=5):
        if G.n <= 11:
            yield label, G
