"""Doily recognition, small-doily search and the exhaustive oracle.

A doily is an induced cycle together with three pairwise non-adjacent
vertices ("tufts"), each having exactly one neighbour on the cycle, at three
distinct attachment points.  Equivalently it is an induced subdivision of the
net (triangle with three pendant vertices).
"""
from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import TYPE_CHECKING

from .graph import Graph, flood, iter_bits, mask_of

if TYPE_CHECKING:
    from .frames import Frame

__all__ = [
    "DoilyCertificate",
    "OracleReport",
    "OracleLimitError",
    "ORACLE_LIMIT",
    "is_doily",
    "certificate_for",
    "induced_cycles",
    "find_doily_upto",
    "oracle_report",
    "is_frame_for",
    "cycle_arc",
]

ORACLE_LIMIT = 22


class OracleLimitError(ValueError):
    """The exhaustive oracle was asked to handle a graph above its size guard."""


def cycle_arc(cycle: tuple[int, ...], start: int, end: int, avoid: int) -> list[int] | None:
    """Vertices of the arc of ``cycle`` from ``start`` to ``end`` that misses ``avoid``.

    Returns ``None`` when any of the three is not on the cycle or no such arc
    exists.
    """
    pos = {v: i for i, v in enumerate(cycle)}
    if start not in pos or end not in pos or avoid not in pos:
        return None
    L = len(cycle)
    for step in (1, -1):
        arc = [start]
        i = pos[start]
        while cycle[i] != end:
            i = (i + step) % L
            if cycle[i] == avoid:
                break
            arc.append(cycle[i])
        else:
            return arc
    return None


@dataclass(frozen=True)
class DoilyCertificate:
    """A doily given by its cycle, attachment points and tufts.

    ``cycle`` lists the cycle in clockwise order, and ``attach[0..2]`` appear in
    that clockwise order; ``tufts[i]`` hangs off ``attach[i]``.  Indices are
    0-based and taken modulo three, so ``path(i)`` runs clockwise from
    ``attach[i+1]`` to ``attach[i-1]`` and avoids ``attach[i]``.
    """

    cycle: tuple[int, ...]
    attach: tuple[int, int, int]
    tufts: tuple[int, int, int]
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        pos = {v: i for i, v in enumerate(self.cycle)}
        if len(pos) != len(self.cycle) or len(self.cycle) < 3:
            raise ValueError("cycle must list at least three distinct vertices")
        if len(set(self.attach)) != 3 or any(a not in pos for a in self.attach):
            raise ValueError("attachment points must be three distinct cycle vertices")
        if len(set(self.tufts)) != 3 or any(b in pos for b in self.tufts):
            raise ValueError("tufts must be three distinct vertices off the cycle")
        L = len(self.cycle)
        p = [pos[a] for a in self.attach]
        if (p[1] - p[0]) % L + (p[2] - p[1]) % L + (p[0] - p[2]) % L != L:
            raise ValueError("attachment points are not in clockwise order")
        object.__setattr__(self, "_pos", pos)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.cycle + self.tufts))

    @property
    def size(self) -> int:
        return len(self.cycle) + 3

    def position(self, v: int) -> int:
        return self._pos[v]

    def on_cycle(self, v: int) -> bool:
        return v in self._pos

    def succ(self, v: int) -> int:
        return self.cycle[(self._pos[v] + 1) % len(self.cycle)]

    def pred(self, v: int) -> int:
        return self.cycle[(self._pos[v] - 1) % len(self.cycle)]

    def path(self, i: int) -> list[int]:
        """Cycle path from ``attach[i+1]`` clockwise to ``attach[i-1]``."""
        start, end = self.attach[(i + 1) % 3], self.attach[(i - 1) % 3]
        out = [start]
        while out[-1] != end:
            out.append(self.succ(out[-1]))
        return out

    def paths(self) -> tuple[list[int], list[int], list[int]]:
        return self.path(0), self.path(1), self.path(2)

    def oriented(self, attach: tuple[int, int, int]) -> "DoilyCertificate":
        """Same doily with attachment points relabelled in the given order.

        The cycle is reversed when needed so that the new order is clockwise.
        """
        if sorted(attach) != sorted(self.attach):
            raise ValueError("attach must be a permutation of the attachment points")
        tuft_of = dict(zip(self.attach, self.tufts))
        tufts = tuple(tuft_of[a] for a in attach)
        L = len(self.cycle)
        p = [self._pos[a] for a in attach]
        clockwise = (p[1] - p[0]) % L + (p[2] - p[1]) % L + (p[0] - p[2]) % L == L
        cycle = self.cycle if clockwise else (self.cycle[0],) + self.cycle[:0:-1]
        return DoilyCertificate(cycle, tuple(attach), tufts)

    def relabel(self, mapping) -> "DoilyCertificate":
        """Translate every vertex id through ``mapping`` (dict or sequence)."""
        return DoilyCertificate(
            tuple(mapping[v] for v in self.cycle),
            tuple(mapping[v] for v in self.attach),
            tuple(mapping[v] for v in self.tufts),
        )

    def canonical(self) -> "DoilyCertificate":
        return _canonical(self.cycle, dict(zip(self.tufts, self.attach)))

    def to_json(self) -> dict:
        return {
            "found": True,
            "vertices": list(self.vertices),
            "cycle": list(self.cycle),
            "tufts": [{"tuft": b, "attach": a} for b, a in zip(self.tufts, self.attach)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DoilyCertificate":
        tufts = tuple(int(t["tuft"]) for t in data["tufts"])
        attach = tuple(int(t["attach"]) for t in data["tufts"])
        cycle = tuple(int(v) for v in data["cycle"])
        L = len(cycle)
        pos = {v: i for i, v in enumerate(cycle)}
        if len(attach) != 3 or any(a not in pos for a in attach):
            raise ValueError("need three tufts attached to cycle vertices")
        # either orientation is accepted on input
        p = [pos[a] for a in attach]
        if (p[1] - p[0]) % L + (p[2] - p[1]) % L + (p[0] - p[2]) % L != L:
            cycle = (cycle[0],) + cycle[:0:-1]
        return cls(cycle, attach, tufts)


def _canonical(cycle, tuft_to_attach: dict[int, int]) -> DoilyCertificate:
    """Lexicographically smallest rotation/reflection of the cycle; the first
    tuft is the smallest tuft id and the rest follow clockwise."""
    L = len(cycle)
    i = cycle.index(min(cycle))
    nxt, prv = cycle[(i + 1) % L], cycle[(i - 1) % L]
    step = 1 if nxt < prv else -1
    cyc = tuple(cycle[(i + step * k) % L] for k in range(L))
    pos = {v: k for k, v in enumerate(cyc)}
    b1 = min(tuft_to_attach)
    a1 = tuft_to_attach[b1]
    rest = sorted(
        ((b, a) for b, a in tuft_to_attach.items() if b != b1),
        key=lambda ba: (pos[ba[1]] - pos[a1]) % L,
    )
    tufts = (b1,) + tuple(b for b, _ in rest)
    attach = (a1,) + tuple(a for _, a in rest)
    return DoilyCertificate(cyc, attach, tufts)


def _match_mask(masks, sub: int):
    """Decide whether ``sub`` induces a doily.

    Returns ``(cycle_mask, {tuft: attach})`` or ``None``.
    """
    k = sub.bit_count()
    if k < 6:
        return None
    ones = []
    threes = 0
    for v in iter_bits(sub):
        d = (masks[v] & sub).bit_count()
        if d == 1:
            ones.append(v)
        elif d == 3:
            threes += 1
        elif d != 2:
            return None
    if len(ones) != 3 or threes != 3:
        return None
    tufts = {}
    for b in ones:
        nb = masks[b] & sub
        a = nb.bit_length() - 1
        if (masks[a] & sub).bit_count() != 3:
            return None
        tufts[b] = a
    if len(set(tufts.values())) != 3:
        return None
    cyc = sub & ~mask_of(ones)
    start = (cyc & -cyc).bit_length() - 1
    if flood(masks, start, cyc) != cyc:
        return None
    return cyc, tufts


def _walk_cycle(masks, cyc: int) -> tuple[int, ...]:
    start = (cyc & -cyc).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = next(u for u in iter_bits(masks[cur] & cyc) if u != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > cyc.bit_count():
            raise AssertionError("cycle walk did not close")
    return tuple(order)


def certificate_for(G: Graph, vertices) -> DoilyCertificate | None:
    """Canonical certificate if ``vertices`` induce a doily of ``G``.

    Runs in time linear in the size of the induced subgraph: the degree
    profile must be three 1s, three 3s and 2s otherwise, every degree-1
    vertex must hang off a distinct degree-3 vertex, and what remains after
    dropping the degree-1 vertices must be one cycle.
    """
    S = set(vertices)
    if any(not 0 <= v < G.n for v in S):
        raise ValueError("vertex id out of range")
    if len(S) < 6:
        return None
    nb = {v: G.neighbors(v) & S for v in S}
    ones = [v for v in S if len(nb[v]) == 1]
    if len(ones) != 3:
        return None
    if sum(1 for v in S if len(nb[v]) == 3) != 3:
        return None
    if any(len(nb[v]) not in (1, 2, 3) for v in S):
        return None
    tufts = {b: next(iter(nb[b])) for b in ones}
    if len(set(tufts.values())) != 3 or any(len(nb[a]) != 3 for a in tufts.values()):
        return None
    ring = S - set(ones)
    start = min(ring)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(u for u in nb[cur] if u in ring and u != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > len(ring):
            return None
    if len(order) != len(ring):
        return None
    return _canonical(tuple(order), tufts)


def is_doily(G: Graph) -> DoilyCertificate | None:
    """Certificate when ``G`` as a whole is a doily, else ``None``."""
    return certificate_for(G, G.vertices())


def induced_cycles(G: Graph, max_len: int) -> Iterator[tuple[int, ...]]:
    """Every induced cycle with at most ``max_len`` vertices, each once.

    A cycle is reported starting at its smallest vertex, oriented so its
    second vertex is smaller than its last.
    """
    masks = G.masks
    for s in range(G.n):
        higher = G.full_mask & ~((1 << (s + 1)) - 1)
        stack = [(s,)]
        while stack:
            path = stack.pop()
            v = path[-1]
            pmask = mask_of(path)
            for u in iter_bits(masks[v] & higher & ~pmask):
                if len(path) == 1:
                    stack.append((s, u))
                    continue
                others = masks[u] & pmask & ~(1 << v)
                if others == 0:
                    if len(path) + 1 < max_len:
                        stack.append(path + (u,))
                elif others == 1 << s:
                    if path[1] < u:
                        yield path + (u,)


def _tufting(G: Graph, cycle: tuple[int, ...]):
    masks = G.masks
    cm = mask_of(cycle)
    by_attach = defaultdict(list)
    for w in iter_bits(G.full_mask & ~cm):
        nb = masks[w] & cm
        if nb and nb & (nb - 1) == 0:
            by_attach[nb.bit_length() - 1].append(w)
    points = sorted(by_attach)
    for trio in combinations(points, 3):
        for bs in product(*(by_attach[a] for a in trio)):
            if masks[bs[0]] >> bs[1] & 1 or masks[bs[0]] >> bs[2] & 1 or masks[bs[1]] >> bs[2] & 1:
                continue
            return dict(zip(bs, trio))
    return None


def _find_by_subsets(G: Graph, max_size: int) -> DoilyCertificate | None:
    for k in range(6, min(max_size, G.n) + 1):
        for combo in combinations(range(G.n), k):
            cert = certificate_for(G, combo)
            if cert is not None:
                return cert
    return None


def find_doily_upto(G: Graph, max_size: int = 8, method: str = "cycles") -> DoilyCertificate | None:
    """Some doily of ``G`` with at most ``max_size`` vertices, if one exists.

    ``method="cycles"`` enumerates induced cycles of length ``3..max_size-3``
    (shortest first) and searches each for a tufting; ``method="subsets"``
    checks vertex subsets directly and is kept as a cross-check.
    """
    if max_size < 6:
        raise ValueError("a doily has at least six vertices")
    if method == "subsets":
        return _find_by_subsets(G, max_size)
    if method != "cycles":
        raise ValueError(f"unknown method {method!r}")
    cycles = sorted(induced_cycles(G, max_size - 3), key=lambda c: (len(c), c))
    for cyc in cycles:
        tufts = _tufting(G, cyc)
        if tufts is not None:
            return _canonical(cyc, tufts)
    return None


@dataclass
class OracleReport:
    exists: bool
    min_size: int | None = None
    all_min_doilies: list[DoilyCertificate] | None = None

    def to_json(self) -> dict:
        out = {"exists": self.exists, "min_size": self.min_size}
        if self.all_min_doilies is not None:
            out["all_min_doilies"] = [c.to_json() for c in self.all_min_doilies]
        return out


def oracle_report(G: Graph, enumerate_all_min: bool = False, limit: int = ORACLE_LIMIT) -> OracleReport:
    """Exhaustive ground truth by subset enumeration in increasing size.

    Exponential by design; refuses graphs with more than ``limit`` vertices.
    With ``enumerate_all_min`` every minimum vertex set inducing a doily is
    listed, in lexicographic order of the sets.
    """
    if G.n > limit:
        raise OracleLimitError(f"oracle limited to {limit} vertices, got {G.n}")
    masks = G.masks
    for k in range(6, G.n + 1):
        found = []
        for combo in combinations(range(G.n), k):
            hit = _match_mask(masks, mask_of(combo))
            if hit is None:
                continue
            cyc, tufts = hit
            found.append(_canonical(_walk_cycle(masks, cyc), tufts))
            if not enumerate_all_min:
                return OracleReport(True, k, None)
        if found:
            return OracleReport(True, k, found)
    return OracleReport(False, None, [] if enumerate_all_min else None)


def is_frame_for(G: Graph, K: DoilyCertificate, F: "Frame") -> bool:
    """Whether the frame ``F`` of ``G`` frames the doily ``K``.

    Requires the tufts of ``F`` to lie in ``K`` and, for every ``i``, the
    entries ``a''[i+1]`` and ``a'[i-1]`` to lie on the cycle arc between
    ``a[i-1]`` and ``a[i+1]`` that misses ``a[i]``.
    """
    kv = set(K.vertices)
    if any(b not in kv for b in F.b):
        return False
    for i in range(3):
        lo, hi = F.a[(i - 1) % 3], F.a[(i + 1) % 3]
        arc = cycle_arc(K.cycle, lo, hi, F.a[i])
        if arc is None:
            return False
        if F.a_dprime[(i + 1) % 3] not in arc or F.a_prime[(i - 1) % 3] not in arc:
            return False
    return True
