"""Shortest-path detector and the two-step driver."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from itertools import permutations

from .frames import CandidatePair, Frame, StreamStats, candidate_stream
from .graph import Graph, bfs_shortest_path
from .recognition import DoilyCertificate, certificate_for, find_doily_upto

__all__ = [
    "DetectorOutcome",
    "SMALL_DOILY_SIZE",
    "direct_pair",
    "detect_from_candidate",
    "run_full",
]

SMALL_DOILY_SIZE = 8


@dataclass(frozen=True)
class DetectorOutcome:
    certificate: DoilyCertificate | None
    step: str | None = None  # "small-search" or "candidates"
    candidate_index: int | None = None

    @property
    def found(self) -> bool:
        return self.certificate is not None

    def to_json(self) -> dict:
        if self.certificate is None:
            return {"found": False}
        out = self.certificate.to_json()
        out["step"] = self.step
        if self.candidate_index is not None:
            out["candidate_index"] = self.candidate_index
        return out


def direct_pair(G: Graph, F: Frame) -> CandidatePair:
    """Wrap an already-clean graph and frame as a candidate pair."""
    ident = tuple(range(G.n))
    return CandidatePair(graph=G, frame=F, to_original=ident, source_frame=F)


def _q_path(G: Graph, F: Frame, i: int, forbidden: set[int]) -> list[int] | None:
    s, t = F.a_prime[(i - 1) % 3], F.a_dprime[(i + 1) % 3]
    if s in forbidden or t in forbidden:
        return None
    return bfs_shortest_path(G, s, t, forbidden)


def detect_from_candidate(pair: CandidatePair, stats: StreamStats | None = None) -> DoilyCertificate | None:
    """Assemble a doily from three shortest paths, in input ids.

    Each path runs from ``a'[i-1]`` to ``a''[i+1]`` avoiding the six frame
    vertices ``a`` and ``b``; a missing path contributes nothing.  The
    assembled vertex set is returned only if it really induces a doily.
    """
    G, F = pair.graph, pair.frame
    forbidden = set(F.a) | set(F.b)
    keep = set(forbidden)
    for i in range(3):
        if stats is not None:
            stats.bfs_calls += 1
        q = _q_path(G, F, i, forbidden)
        if q is not None:
            keep.update(q)
    cert = certificate_for(G, keep)
    if cert is None:
        return None
    return cert.relabel(pair.to_original).canonical()


def _search_chunk(G: Graph, triples) -> tuple[int, DoilyCertificate] | None:
    for k, pair in enumerate(candidate_stream(G, triples=triples)):
        cert = detect_from_candidate(pair)
        if cert is not None:
            return k, cert
    return None


def run_full(
    G: Graph,
    stats: StreamStats | None = None,
    threads: int = 1,
    small_size: int = SMALL_DOILY_SIZE,
) -> DetectorOutcome:
    """Find a doily of ``G`` or prove there is none.

    First every doily on at most ``small_size`` (eight or more) vertices is
    looked for directly; then each cleaned candidate pair is handed to the
    shortest-path detector and the first certificate wins.  With ``threads > 1`` the candidate space is
    split by first attachment point across processes and any certificate may
    be returned.
    """
    if small_size < SMALL_DOILY_SIZE:
        raise ValueError(f"small_size must be at least {SMALL_DOILY_SIZE}")
    small = find_doily_upto(G, small_size)
    if small is not None:
        return DetectorOutcome(small, "small-search")
    if threads > 1 and G.n > 3:
        return _run_parallel(G, threads)
    for k, pair in enumerate(candidate_stream(G, stats)):
        cert = detect_from_candidate(pair, stats)
        if cert is not None:
            return DetectorOutcome(cert, "candidates", k)
    return DetectorOutcome(None)


def _run_parallel(G: Graph, threads: int) -> DetectorOutcome:
    chunks = [[t for t in permutations(range(G.n), 3) if t[0] == x] for x in range(G.n)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_search_chunk, G, chunk) for chunk in chunks]
        for fut in as_completed(futures):
            hit = fut.result()
            if hit is not None:
                for other in futures:
                    other.cancel()
                return DetectorOutcome(hit[1], "candidates", None)
    return DetectorOutcome(None)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("DOILY_THREADS", "1")))
    except ValueError:
        return 1
