"""Seeded instance generators for the test corpus.

Randomness comes from numpy's PCG64 bit generator, whose stream is fixed
for a given seed across platforms and numpy releases.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np

from .graph import Graph, from_edge_list

__all__ = [
    "GenSpec",
    "gnp",
    "planted_doily",
    "net_subdivision",
    "net_subdivision_profiles",
    "net_subdivisions_upto",
    "random_tree",
    "complete_graph",
    "complete_bipartite",
    "path_graph",
    "cycle_graph",
    "generate",
]


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi graph: every pair ``u < v`` (lexicographic) is drawn once."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = _rng(seed)
    draws = rng.random(n * (n - 1) // 2)
    edges = []
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if draws[k] < p:
                edges.append((u, v))
            k += 1
    return from_edge_list(n, edges)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a Pruefer sequence."""
    if n <= 2:
        return from_edge_list(n, [(0, 1)] if n == 2 else [])
    seq = _rng(seed).integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return from_edge_list(n, edges)


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(k, k + 1) for k in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return from_edge_list(n, [(k, (k + 1) % n) for k in range(n)])


def planted_doily(
    cycle_length: int,
    tuft_positions: Sequence[int],
    extra_n: int = 0,
    edge_p: float = 0.0,
    seed: int = 0,
) -> Graph:
    """A doily on ``cycle_length + 3`` vertices plus ``extra_n`` noise vertices.

    Cycle vertices are ``0..L-1`` in order; tuft ``L + i`` hangs off cycle
    position ``tuft_positions[i]``.  Random edges always have at least one
    noise endpoint, so the planted doily stays induced.
    """
    L = cycle_length
    if L < 3:
        raise ValueError("cycle_length must be at least 3")
    pos = list(tuft_positions)
    if len(pos) != 3 or len(set(pos)) != 3 or any(not 0 <= x < L for x in pos):
        raise ValueError("need three distinct tuft positions on the cycle")
    if extra_n < 0 or not 0.0 <= edge_p <= 1.0:
        raise ValueError("bad noise parameters")
    edges = [(k, (k + 1) % L) for k in range(L)]
    edges += [(L + i, x) for i, x in enumerate(pos)]
    base = L + 3
    n = base + extra_n
    if extra_n:
        rng = _rng(seed)
        for v in range(base, n):
            draws = rng.random(v)
            edges += [(u, v) for u in range(v) if draws[u] < edge_p]
    return from_edge_list(n, edges)


def net_subdivision(branches: Sequence[int], arcs: Sequence[int]) -> Graph:
    """Subdivided net.

    ``arcs[i]`` is the length (in edges) of the cycle arc opposite attachment
    point ``i``; ``branches[i]`` is the length of the pendant path at ``i``.
    """
    if len(branches) != 3 or len(arcs) != 3 or min(branches) < 1 or min(arcs) < 1:
        raise ValueError("three branch and three arc lengths, all at least 1")
    edges = []
    # attachment points 0,1,2; arc opposite i joins i+1 and i-1
    nxt = 3
    for i in range(3):
        lo, hi = (i + 1) % 3, (i - 1) % 3
        prev = lo
        for _ in range(arcs[i] - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, hi))
    for i in range(3):
        prev = i
        for _ in range(branches[i]):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges)


def _canonical_profile(branches, arcs) -> tuple[tuple[int, int], ...]:
    # the net's automorphisms permute the three (branch, opposite arc) pairs
    return tuple(sorted(zip(branches, arcs)))


def net_subdivision_profiles(max_n: int) -> list[tuple[tuple[int, int], ...]]:
    """Canonical ``((branch, arc), ...)`` profiles with at most ``max_n`` vertices."""
    if max_n < 6:
        raise ValueError("the net itself has six vertices")
    budget = max_n - 5
    seen = set()
    for lens in product(range(1, budget + 1), repeat=6):
        if sum(lens) <= max_n:
            seen.add(_canonical_profile(lens[:3], lens[3:]))
    return sorted(seen, key=lambda pr: (sum(b + c for b, c in pr), pr))


def net_subdivisions_upto(max_n: int) -> Iterator[Graph]:
    for profile in net_subdivision_profiles(max_n):
        branches, arcs = zip(*profile)
        yield net_subdivision(branches, arcs)


@dataclass
class GenSpec:
    kind: str  # "gnp" | "planted" | "subdivision"
    n: int = 10
    p: float = 0.3
    seed: int = 0
    cycle_length: int = 9
    tuft_positions: tuple[int, ...] = (0, 3, 6)
    extra_n: int = 0
    branches: tuple[int, ...] = (1, 1, 1)
    arcs: tuple[int, ...] = (1, 1, 1)


def generate(spec: GenSpec) -> Graph:
    if spec.kind == "gnp":
        return gnp(spec.n, spec.p, spec.seed)
    if spec.kind == "planted":
        return planted_doily(spec.cycle_length, spec.tuft_positions, spec.extra_n, spec.p, spec.seed)
    if spec.kind == "subdivision":
        return net_subdivision(spec.branches, spec.arcs)
    raise ValueError(f"unknown generator kind {spec.kind!r}")
