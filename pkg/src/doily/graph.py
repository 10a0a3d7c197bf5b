"""Immutable simple graphs over dense integer ids, plus the traversal primitives
the detector is built on.

Adjacency is stored twice: as frozensets for readable code and as integer
bitmasks for the inner loops of the enumeration engine.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphFormatError",
    "from_edge_list",
    "induced_subgraph",
    "connected_components",
    "bfs_shortest_path",
    "parse_edgelist",
    "parse_graph6",
    "format_edgelist",
    "read_graph",
]


class GraphFormatError(ValueError):
    """Raised for malformed graph input (loops, bad ids, broken headers)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def flood(masks: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= masks[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; every derived graph is a new object.
    """

    __slots__ = ("n", "_adj", "_masks", "_m")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        if len(adjacency) != n:
            raise GraphFormatError("adjacency length does not match n")
        adj = tuple(frozenset(nb) for nb in adjacency)
        for v, nb in enumerate(adj):
            if v in nb:
                raise GraphFormatError(f"self-loop at vertex {v}")
            for u in nb:
                if not 0 <= u < n:
                    raise GraphFormatError(f"vertex id {u} out of range for n={n}")
                if v not in adj[u]:
                    raise GraphFormatError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self._adj = adj
        self._masks = tuple(mask_of(nb) for nb in adj)
        self._m = sum(len(nb) for nb in adj) // 2

    @property
    def m(self) -> int:
        return self._m

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; repeated pairs collapse into one edge."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``S``; new ids follow ascending old ids.

    Returns the graph and the ``old -> new`` id map.
    """
    keep = sorted(set(S))
    for v in keep:
        if not 0 <= v < G.n:
            raise GraphFormatError(f"vertex {v} not in graph with n={G.n}")
    index = {v: i for i, v in enumerate(keep)}
    adj = [[index[u] for u in G.neighbors(v) if u in index] for v in keep]
    return Graph(len(keep), adj), index


def connected_components(G: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of ``G - removed``, ordered by smallest member."""
    alive = G.full_mask & ~mask_of(removed)
    out = []
    while alive:
        start = (alive & -alive).bit_length() - 1
        comp = flood(G.masks, start, alive)
        out.append(frozenset(iter_bits(comp)))
        alive &= ~comp
    return out


def bfs_shortest_path(
    G: Graph, s: int, t: int, forbidden: Iterable[int] = ()
) -> list[int] | None:
    """A shortest ``s``-``t`` path avoiding ``forbidden``, or ``None``.

    Neighbours are explored in ascending id order, so the returned path is
    reproducible.
    """
    blocked = set(forbidden)
    if s in blocked or t in blocked:
        raise ValueError("path endpoints may not be forbidden")
    if s == t:
        return [s]
    parent = {s: s}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in sorted(G.neighbors(v)):
            if u in parent or u in blocked:
                continue
            parent[u] = v
            if u == t:
                path = [t]
                while path[-1] != s:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(u)
    return None


# -- text formats ---------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Loops and repeated edges are rejected rather than repaired.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"bad header line {lines[0]!r}; expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header line {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}")
    seen = set()
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {ln!r}") from exc
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}")
        seen.add(key)
        edges.append((u, v))
    return from_edge_list(n, edges)


def parse_graph6(text: str) -> Graph:
    import networkx as nx

    data = text.strip().encode("ascii")
    try:
        nxg = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError) as exc:
        raise GraphFormatError(f"invalid graph6 input: {exc}") from exc
    return from_edge_list(nxg.number_of_nodes(), nxg.edges())


def format_edgelist(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise GraphFormatError(f"unknown format {fmt!r}")
