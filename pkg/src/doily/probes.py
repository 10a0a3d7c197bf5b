"""Executable versions of the attachment vocabulary used in the correctness
argument: minor/major vertices, extreme attachments, the arcs ``W_i`` and the
pairwise relations between major vertices.

Indices are 0-based and taken modulo three.  With a certificate ``K`` whose
attachment points ``a0, a1, a2`` are clockwise, ``K.path(i)`` runs clockwise
from ``a[i+1]`` to ``a[i-1]``.  For an outside vertex ``v``:

* ``y[i]`` is the neighbour of ``v`` on ``path(i-1)`` closest to ``a[i]``;
* ``x[i]`` is the neighbour of ``v`` on ``path(i+1)`` closest to ``a[i]``.

So ``x[i]`` and ``y[i]`` are the nearest attachments of ``v`` on either side
of ``a[i]``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .frames import Frame, is_star_cutset_centre
from .graph import Graph, bfs_shortest_path
from .recognition import (
    DoilyCertificate,
    certificate_for,
    find_doily_upto,
    is_frame_for,
    oracle_report,
)

__all__ = [
    "Classification",
    "AttachmentProfile",
    "Relation",
    "PairRelation",
    "attachment_profile",
    "outside_profiles",
    "w_path",
    "pair_relation",
    "major_consecutive_claim",
    "TrackableWitness",
    "verify_trackable",
    "no_centre_fixpoint",
    "no_major_check",
    "nojumps_check",
    "replacement_check",
    "probe_report",
]


class Classification(str, enum.Enum):
    MINOR = "minor"
    MAJOR = "major"
    NEITHER = "neither"


@dataclass(frozen=True)
class AttachmentProfile:
    v: int
    nk: frozenset[int]
    x: dict[int, int]
    y: dict[int, int]
    minor: bool
    major: bool

    @property
    def classification(self) -> Classification:
        if self.minor:
            return Classification.MINOR
        if self.major:
            return Classification.MAJOR
        return Classification.NEITHER

    def to_json(self) -> dict:
        return {
            "v": self.v,
            "nk": sorted(self.nk),
            "x": {str(i): w for i, w in sorted(self.x.items())},
            "y": {str(i): w for i, w in sorted(self.y.items())},
            "classification": self.classification.value,
        }


def _is_minor(nk: frozenset[int], paths) -> bool:
    if not nk:
        return True
    for P in paths:
        idx = [k for k, w in enumerate(P) if w in nk]
        if len(idx) == len(nk) and idx[-1] - idx[0] <= 2:
            return True
    return False


def attachment_profile(G: Graph, K: DoilyCertificate, v: int) -> AttachmentProfile:
    if v in K.vertices:
        raise ValueError(f"vertex {v} belongs to the doily")
    nk = frozenset(G.neighbors(v)) & frozenset(K.vertices)
    paths = K.paths()
    x, y = {}, {}
    hits = 0
    for i, P in enumerate(paths):
        on = [w for w in P if w in nk]
        if on:
            hits += 1
            y[(i + 1) % 3] = on[0]
            x[(i - 1) % 3] = on[-1]
    return AttachmentProfile(v, nk, x, y, _is_minor(nk, paths), hits == 3)


def outside_profiles(G: Graph, K: DoilyCertificate) -> list[AttachmentProfile]:
    inside = set(K.vertices)
    return [attachment_profile(G, K, v) for v in G.vertices() if v not in inside]


def w_path(G: Graph, K: DoilyCertificate, v: int, i: int) -> list[int]:
    """Clockwise arc of the cycle from ``x[i]`` through ``a[i]`` to ``y[i]``."""
    prof = attachment_profile(G, K, v)
    if i not in prof.x or i not in prof.y:
        raise ValueError(f"vertex {v} lacks neighbours on both sides of attachment {i}")
    out = [prof.x[i]]
    while out[-1] != prof.y[i]:
        out.append(K.succ(out[-1]))
    return out


class Relation(str, enum.Enum):
    DISAGREE = "disagree"
    TIE = "tie"
    U_BEATS_V = "u_beats_v"
    V_BEATS_U = "v_beats_u"


@dataclass(frozen=True)
class PairRelation:
    u: int
    v: int
    relations: tuple[Relation, Relation, Relation]
    ties: tuple[int | None, int | None, int | None] = field(default=(None, None, None))

    def to_json(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "relations": [
                {"kind": r.value, **({"tie": z} if z is not None else {})}
                for r, z in zip(self.relations, self.ties)
            ],
        }


def pair_relation(G: Graph, K: DoilyCertificate, u: int, v: int) -> PairRelation:
    """Per-index relation of two major vertices.

    Positions are measured along the clockwise walk from ``a[i-1]`` through
    ``a[i]`` to ``a[i+1]``.
    """
    if u == v:
        raise ValueError("need two distinct vertices")
    pu, pv = attachment_profile(G, K, u), attachment_profile(G, K, v)
    if not (pu.major and pv.major):
        raise ValueError("pair_relation is defined for major vertices only")
    L = len(K.cycle)
    rels, ties = [], []
    for i in range(3):
        origin = K.position(K.attach[(i - 1) % 3])

        def at(w):
            return (K.position(w) - origin) % L

        xu, xv, yu, yv = pu.x[i], pv.x[i], pu.y[i], pv.y[i]
        if xu == xv or yu == yv:
            rels.append(Relation.TIE)
            ties.append(xu if xu == xv else yu)
        elif (at(xu) < at(xv)) == (at(yu) < at(yv)):
            rels.append(Relation.DISAGREE)
            ties.append(None)
        elif at(xv) < at(xu):
            rels.append(Relation.U_BEATS_V)
            ties.append(None)
        else:
            rels.append(Relation.V_BEATS_U)
            ties.append(None)
    return PairRelation(u, v, tuple(rels), tuple(ties))


def major_consecutive_claim(G: Graph, K: DoilyCertificate, v: int) -> bool:
    """For a major ``v``: ``x[i]`` and its two predecessors are internal to
    ``path(i+1)`` and adjacent to ``v``, and ``y[i]`` with its two
    successors are internal to ``path(i-1)`` and adjacent to ``v``."""
    prof = attachment_profile(G, K, v)
    if not prof.major:
        raise ValueError("claim concerns major vertices")
    for i in range(3):
        for anchor, step, P in ((prof.x[i], K.pred, K.path((i + 1) % 3)),
                                (prof.y[i], K.succ, K.path((i - 1) % 3))):
            inner = set(P[1:-1])
            w = anchor
            for _ in range(3):
                if w not in inner or w not in prof.nk:
                    return False
                w = step(w)
    return True


# -- desk-scale structural checks ------------------------------------------

@dataclass
class TrackableWitness:
    """Oracle evidence that ``(graph, frame)`` is trackable.

    ``framed`` lists the minimum doilies framed by ``frame``, oriented so
    that their attachment points follow ``frame.a``.
    """

    graph: Graph
    frame: Frame
    min_size: int
    framed: list[DoilyCertificate]


def no_centre_fixpoint(G: Graph, a) -> bool:
    return not any(
        is_star_cutset_centre(G, v, a, j)
        for v in G.vertices() if v not in a
        for j in range(3)
    )


def verify_trackable(G: Graph, F: Frame, small_size: int = 8) -> TrackableWitness | None:
    """Oracle-backed trackability: no doily on at most ``small_size`` vertices,
    some minimum doily framed by ``F``, and no star-cutset centre."""
    if find_doily_upto(G, small_size) is not None:
        return None
    report = oracle_report(G, enumerate_all_min=True)
    if not report.exists:
        return None
    framed = [K.oriented(F.a) for K in report.all_min_doilies if is_frame_for(G, K, F)]
    if not framed or not no_centre_fixpoint(G, F.a):
        return None
    return TrackableWitness(G, F, report.min_size, framed)


def _framed_minimum(G: Graph, F: Frame) -> list[DoilyCertificate]:
    if not no_centre_fixpoint(G, F.a):
        raise ValueError("a star-cutset centre separates an attachment point")
    report = oracle_report(G, enumerate_all_min=True)
    framed = [K.oriented(F.a) for K in report.all_min_doilies or () if is_frame_for(G, K, F)]
    if not framed:
        raise ValueError("no minimum doily of G is framed by F")
    return framed


def no_major_check(G: Graph, F: Frame, witness: TrackableWitness | None = None) -> bool:
    """Every vertex outside every minimum doily framed by ``F`` is minor.

    Without a witness the pair must have no star-cutset centre and some
    minimum doily framed by ``F``; otherwise ``ValueError``.
    """
    framed = witness.framed if witness is not None else _framed_minimum(G, F)
    return all(prof.minor for K in framed for prof in outside_profiles(G, K))


def _check_minimum_without_majors(G: Graph, K: DoilyCertificate) -> None:
    if certificate_for(G, K.vertices) is None:
        raise ValueError("K is not a doily of G")
    report = oracle_report(G)
    if report.min_size != K.size:
        raise ValueError("K is not a minimum doily")
    if any(p.major for p in outside_profiles(G, K)):
        raise ValueError("a major vertex exists for K")


def nojumps_check(G: Graph, K: DoilyCertificate, i: int) -> bool:
    """No shortcut around ``a[i]``: distances in ``G - a[i]`` between cycle
    vertices are at least the cycle distance avoiding ``a[i]``; on equality
    the canonical shortest path stays clear of the rest of the cycle."""
    _check_minimum_without_majors(G, K)
    ai = K.attach[i]
    R = [K.succ(ai)]
    while R[-1] != K.pred(ai):
        R.append(K.succ(R[-1]))
    where = {w: k for k, w in enumerate(R)}
    cycle = set(K.cycle)
    for s, t in combinations(R, 2):
        P = R[min(where[s], where[t]): max(where[s], where[t]) + 1]
        Q = bfs_shortest_path(G, s, t, {ai})
        if Q is None or len(Q) < len(P):
            return False
        if len(Q) == len(P):
            outside = cycle - set(P)
            for q in Q[1:-1]:
                if q in outside or G.neighbors(q) & outside:
                    return False
    return True


def replacement_check(G: Graph, K: DoilyCertificate, F: Frame, i: int) -> bool:
    """Swapping ``path(i)`` for a shortest ``a[i-1]``-``a[i+1]`` path of
    ``G - a[i]`` gives a doily of the same size, still framed by ``F``."""
    _check_minimum_without_majors(G, K)
    lo, hi = K.attach[(i - 1) % 3], K.attach[(i + 1) % 3]
    Q = bfs_shortest_path(G, lo, hi, {K.attach[i]})
    if Q is None:
        return False
    interior = set(K.path(i)[1:-1])
    new = (set(K.vertices) - interior) | set(Q)
    cert = certificate_for(G, new)
    return cert is not None and cert.size == K.size and is_frame_for(G, cert, F)


def probe_report(G: Graph, K: DoilyCertificate) -> dict:
    profiles = outside_profiles(G, K)
    majors = [p.v for p in profiles if p.major]
    return {
        "certificate": K.to_json(),
        "paths": [K.path(i) for i in range(3)],
        "profiles": [p.to_json() for p in profiles],
        "relations": [pair_relation(G, K, u, v).to_json() for u, v in combinations(majors, 2)],
    }
