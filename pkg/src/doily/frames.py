"""Frames, star-cutset cleaning and the candidate stream.

A frame is a twelve-tuple ``(b1, b2, b3, a1, a2, a3, a'1, a'2, a'3, a''1,
a''2, a''3)``: three tufts ``b``, their attachment points ``a`` and the two
cycle neighbours of every attachment point.  The stream enumerates every
frame-shaped tuple of the input, deletes what the frame rules out, then strips
star-cutset centres until none is left.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from itertools import permutations, product

from .graph import Graph, flood, induced_subgraph, iter_bits, mask_of
from .recognition import DoilyCertificate

__all__ = [
    "Frame",
    "CandidatePair",
    "StreamStats",
    "frame_of",
    "frame_local_checks",
    "is_frame_in",
    "is_star_cutset_centre",
    "star_cutset_elimination",
    "enumerate_frames",
    "candidate_stream",
]


@dataclass(frozen=True)
class Frame:
    b: tuple[int, int, int]
    a: tuple[int, int, int]
    a_prime: tuple[int, int, int]
    a_dprime: tuple[int, int, int]

    @classmethod
    def from_tuple(cls, t: Sequence[int]) -> "Frame":
        """From ``(b1,b2,b3, a1,a2,a3, a'1,a'2,a'3, a''1,a''2,a''3)``."""
        if len(t) != 12:
            raise ValueError("a frame has twelve entries")
        t = tuple(int(x) for x in t)
        return cls(t[0:3], t[3:6], t[6:9], t[9:12])

    @classmethod
    def from_interleaved(cls, t: Sequence[int]) -> "Frame":
        """From ``(a1,a2,a3, b1,b2,b3, a'1,a''1, a'2,a''2, a'3,a''3)``."""
        if len(t) != 12:
            raise ValueError("a frame has twelve entries")
        t = tuple(int(x) for x in t)
        return cls(t[3:6], t[0:3], (t[6], t[8], t[10]), (t[7], t[9], t[11]))

    def as_tuple(self) -> tuple[int, ...]:
        return self.b + self.a + self.a_prime + self.a_dprime

    @property
    def X(self) -> frozenset[int]:
        return frozenset(self.as_tuple())

    def relabel(self, mapping) -> "Frame":
        return Frame.from_tuple([mapping[v] for v in self.as_tuple()])

    def to_json(self) -> dict:
        return {
            "b": list(self.b),
            "a": list(self.a),
            "a_prime": list(self.a_prime),
            "a_dprime": list(self.a_dprime),
        }


def frame_of(K: DoilyCertificate) -> Frame:
    """The frame a doily induces on itself: ``a'`` precedes, ``a''`` follows."""
    return Frame(
        K.tufts,
        K.attach,
        tuple(K.pred(a) for a in K.attach),
        tuple(K.succ(a) for a in K.attach),
    )


def is_frame_in(G: Graph, F: Frame) -> bool:
    """Degree conditions: ``b_i`` has degree one on ``a_i``; ``a_i`` has exactly
    the neighbours ``b_i, a'_i, a''_i``."""
    if len(set(F.a + F.b)) != 6:
        return False
    for i in range(3):
        if G.neighbors(F.b[i]) != {F.a[i]}:
            return False
        if G.neighbors(F.a[i]) != {F.b[i], F.a_prime[i], F.a_dprime[i]}:
            return False
    return True


def frame_local_checks(G: Graph, F: Frame | Sequence[int]) -> bool:
    """Validity of a twelve-tuple before any deletion is made."""
    if not isinstance(F, Frame):
        F = Frame.from_tuple(F)
    if any(not 0 <= v < G.n for v in F.as_tuple()):
        return False
    b, a, a1, a2 = F.b, F.a, F.a_prime, F.a_dprime
    xmask = mask_of(F.as_tuple())
    masks = G.masks
    # (i) distinct tufts, none equal to an a-entry
    if len(set(b)) != 3 or set(b) & set(a + a1 + a2):
        return False
    # (ii) b_i sees exactly a_i inside X
    for i in range(3):
        if masks[b[i]] & xmask != 1 << a[i]:
            return False
    # (iii)
    if len(set(a)) != 3:
        return False
    # (iv)
    for i in range(3):
        if a1[i] == a2[i] or not G.has_edge(a[i], a1[i]) or not G.has_edge(a[i], a2[i]):
            return False
        if masks[a[i]] & xmask & ~mask_of((b[i], a1[i], a2[i])):
            return False
    # (v)
    for i in range(3):
        lo, hi = (i - 1) % 3, (i + 1) % 3
        if G.has_edge(a[lo], a[hi]):
            if a1[lo] != a[hi] or a2[hi] != a[lo]:
                return False
        else:
            others = {a[lo], a2[lo], a1[i], a[i], a2[i], a1[hi], a[hi]}
            if a1[lo] in others or a2[hi] in others:
                return False
    return True


def _separated(masks, alive: int, v: int, a: Sequence[int], amask: int) -> int:
    """Bitmask of the a-indices cut off from both other attachment points
    once ``v`` and its non-``a`` neighbours are removed."""
    rem = alive & ~((1 << v) | (masks[v] & ~amask))
    comps = [flood(masks, x, rem) for x in a]
    out = 0
    for j in range(3):
        if not any(comps[j] >> a[k] & 1 for k in range(3) if k != j):
            out |= 1 << j
    return out


def is_star_cutset_centre(G: Graph, v: int, a: Sequence[int], j: int) -> bool:
    """Whether ``v`` centres a star cutset separating ``a[j]`` from the other
    two attachment points.

    Removing every neighbour of ``v`` outside ``a`` is the strongest choice of
    star, so one component computation decides it.
    """
    if len(set(a)) != 3:
        raise ValueError("attachment points must be distinct")
    if v in a:
        raise ValueError("the centre may not be an attachment point")
    return bool(_separated(G.masks, G.full_mask, v, a, mask_of(a)) >> j & 1)


def _is_centre(masks, alive: int, v: int, a: Sequence[int], amask: int) -> bool:
    rem = alive & ~((1 << v) | (masks[v] & ~amask))
    comp = flood(masks, a[0], rem)
    # some a_j is isolated from both others iff the three are not all joined
    return not (comp >> a[1] & 1 and comp >> a[2] & 1)


def _eliminate(masks, alive: int, a: Sequence[int], order=None) -> tuple[int, int]:
    """Fixpoint of star-centre deletion; returns ``(alive, deletions)``."""
    amask = mask_of(a)
    deleted = 0
    while True:
        scan = iter_bits(alive & ~amask) if order is None else (
            v for v in order if alive >> v & 1 and not amask >> v & 1)
        for v in scan:
            if _is_centre(masks, alive, v, a, amask):
                alive &= ~(1 << v)
                deleted += 1
                break
        else:
            return alive, deleted


def star_cutset_elimination(
    G: Graph, a: Sequence[int], order: Iterable[int] | None = None
) -> tuple[Graph, dict[int, int]]:
    """Delete star-cutset centres (ascending id, rescanning after every
    deletion) until none separates an attachment point from the other two.

    ``order`` overrides the scan order.  Returns the surviving induced
    subgraph with its ``old -> new`` id map.
    """
    if len(set(a)) != 3 or any(not 0 <= x < G.n for x in a):
        raise ValueError("need three distinct attachment points of G")
    alive, _ = _eliminate(G.masks, G.full_mask, a, None if order is None else list(order))
    return induced_subgraph(G, iter_bits(alive))


@dataclass
class StreamStats:
    tuples: int = 0
    candidates: int = 0
    erased: int = 0
    deletions: int = 0
    cache_hits: int = 0
    bfs_calls: int = 0

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class CandidatePair:
    """A cleaned induced subgraph of the input together with a frame in it.

    ``to_original[k]`` is the input id of vertex ``k`` of ``graph``;
    ``frame`` uses ``graph`` ids.
    """

    graph: Graph
    frame: Frame
    to_original: tuple[int, ...]
    source_frame: Frame = field(compare=False)

    def original_ids(self, vertices: Iterable[int]) -> list[int]:
        return [self.to_original[v] for v in vertices]


def enumerate_frames(G: Graph, triples: Iterable[tuple[int, int, int]] | None = None) -> Iterator[Frame]:
    """Every twelve-tuple of ``G`` passing :func:`frame_local_checks`.

    Tuples are built by walking neighbourhoods, which reaches exactly the
    tuples an unrestricted twelve-fold product would accept.
    """
    masks = G.masks
    nbrs = [sorted(G.neighbors(v)) for v in range(G.n)]
    for a in permutations(range(G.n), 3) if triples is None else triples:
        amask = mask_of(a)
        bopts = []
        for i in range(3):
            others = amask & ~(1 << a[i])
            bopts.append([b for b in nbrs[a[i]] if not amask >> b & 1 and not masks[b] & others])
        if not all(bopts):
            continue
        forced_p, forced_pp = [], []
        for i in range(3):
            lo, hi = a[(i - 1) % 3], a[(i + 1) % 3]
            forced_p.append(lo if G.has_edge(a[i], lo) else None)
            forced_pp.append(hi if G.has_edge(a[i], hi) else None)
        for b in product(*bopts):
            if len(set(b)) != 3:
                continue
            bmask = mask_of(b)
            if any(masks[x] & bmask for x in b):
                continue
            # b_j may see no frame vertex but a_j
            banned = 0
            for j in range(3):
                banned |= masks[b[j]] & ~(1 << a[j])
            pair_opts = []
            for i in range(3):
                cand = [x for x in nbrs[a[i]] if not (bmask | banned) >> x & 1]
                opts = []
                for p in ([forced_p[i]] if forced_p[i] is not None else cand):
                    if forced_p[i] is None and amask >> p & 1:
                        continue
                    for q in ([forced_pp[i]] if forced_pp[i] is not None else cand):
                        if q == p or (forced_pp[i] is None and amask >> q & 1):
                            continue
                        opts.append((p, q))
                if not opts:
                    break
                pair_opts.append(opts)
            else:
                yield from _combine_branches(G, b, a, pair_opts)


def _branch_compatible(masks, a, i, pi, j, pj) -> bool:
    # a_i may see no frame vertex outside its own branch, and likewise a_j
    own_i, own_j = 1 << pi[0] | 1 << pi[1], 1 << pj[0] | 1 << pj[1]
    return not (masks[a[i]] & own_j & ~own_i or masks[a[j]] & own_i & ~own_j)


def _combine_branches(G: Graph, b, a, pair_opts) -> Iterator[Frame]:
    masks = G.masks
    for p0 in pair_opts[0]:
        opts1 = [p1 for p1 in pair_opts[1] if _branch_compatible(masks, a, 0, p0, 1, p1)]
        if not opts1:
            continue
        opts2 = [p2 for p2 in pair_opts[2] if _branch_compatible(masks, a, 0, p0, 2, p2)]
        for p1 in opts1:
            for p2 in opts2:
                if not _branch_compatible(masks, a, 1, p1, 2, p2):
                    continue
                F = Frame(b, a, (p0[0], p1[0], p2[0]), (p0[1], p1[1], p2[1]))
                if frame_local_checks(G, F):
                    yield F


def candidate_stream(
    G: Graph,
    stats: StreamStats | None = None,
    triples: Iterable[tuple[int, int, int]] | None = None,
) -> Iterator[CandidatePair]:
    """Cleaned ``(graph, frame)`` pairs, one per surviving frame tuple.

    For each valid tuple: delete the neighbours of every ``b_i`` other than
    ``a_i`` and the neighbours of every ``a_i`` other than ``b_i, a'_i,
    a''_i``; then eliminate star-cutset centres; drop the tuple if a frame
    vertex was erased.
    """
    stats = stats if stats is not None else StreamStats()
    masks = G.masks
    fixpoints: dict[tuple[int, int], int] = {}
    subgraphs: dict[int, tuple[Graph, dict[int, int]]] = {}
    for F in enumerate_frames(G, triples):
        stats.tuples += 1
        alive = G.full_mask
        for i in range(3):
            alive &= ~(masks[F.b[i]] & ~(1 << F.a[i]))
            alive &= ~(masks[F.a[i]] & ~mask_of((F.b[i], F.a_prime[i], F.a_dprime[i])))
        key = (alive, mask_of(F.a))
        if key in fixpoints:
            stats.cache_hits += 1
            alive = fixpoints[key]
        else:
            alive, deleted = _eliminate(masks, alive, F.a)
            stats.deletions += deleted
            fixpoints[key] = alive
        xmask = mask_of(F.as_tuple())
        if alive & xmask != xmask:
            stats.erased += 1
            continue
        if alive not in subgraphs:
            subgraphs[alive] = induced_subgraph(G, iter_bits(alive))
        sub, index = subgraphs[alive]
        stats.candidates += 1
        yield CandidatePair(
            graph=sub,
            frame=F.relabel(index),
            to_original=tuple(iter_bits(alive)),
            source_frame=F,
        )
