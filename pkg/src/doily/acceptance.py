"""Acceptance criteria as runnable checks.

Each ``criterion_*`` function returns a :class:`CriterionResult`.  The same
functions back ``tests/test_acceptance.py`` and ``doily selftest``.
"""
from __future__ import annotations

import json
import os
import random
import statistics
import subprocess
import sys
import time
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from . import detector as _detector
from .corpus import (
    bare_doilies,
    harvest_corpus,
    negative_corpus,
    planted_corpus,
    random_corpus,
    subdivision_corpus,
)
from .frames import candidate_stream, frame_of, is_frame_in
from .generators import planted_doily
from .graph import from_edge_list
from .probes import (
    TrackableWitness,
    no_centre_fixpoint,
    no_major_check,
    nojumps_check,
    replacement_check,
    verify_trackable,
)
from .recognition import ORACLE_LIMIT, certificate_for, find_doily_upto, oracle_report

RUNTIME_RATIO_LIMIT = 2.5
TIMING_TRIALS = 50


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}: {self.detail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed, "detail": self.detail}


def _sound(G, outcome) -> bool:
    return outcome.certificate is None or certificate_for(G, outcome.certificate.vertices) is not None


def criterion_oracle_equivalence(quick: bool = False) -> CriterionResult:
    graphs = list(random_corpus(seeds=3 if quick else 30))
    disagree, unsound = [], []
    for label, G in graphs:
        out = _detector.run_full(G)
        if out.found != oracle_report(G).exists:
            disagree.append(label)
        if not _sound(G, out):
            unsound.append(label)
    ok = not disagree and not unsound and (quick or len(graphs) >= 500)
    return CriterionResult(1, "oracle equivalence", ok,
                           f"{len(graphs)} graphs, {len(disagree)} disagreements, {len(unsound)} unsound"
                           + (f" e.g. {(disagree + unsound)[0]}" if disagree or unsound else ""))


def criterion_subdivisions(quick: bool = False) -> CriterionResult:
    misses = []
    graphs = list(subdivision_corpus(10 if quick else 12))
    for label, G in graphs:
        out = _detector.run_full(G)
        if not out.found or not _sound(G, out):
            misses.append(label)
    return CriterionResult(2, "subdivision completeness", not misses,
                           f"{len(graphs)} net subdivisions, {len(misses)} misses")


def criterion_planted(quick: bool = False) -> CriterionResult:
    misses = []
    graphs = list(planted_corpus(40 if quick else 200))
    for label, G in graphs:
        out = _detector.run_full(G)
        if not out.found or not _sound(G, out):
            misses.append(label)
    return CriterionResult(3, "planted positives", not misses,
                           f"{len(graphs)} planted instances, {len(misses)} misses")


def criterion_negatives(quick: bool = False) -> CriterionResult:
    false_pos, oracle_checked = [], 0
    graphs = list(negative_corpus(max_tree=10 if quick else 15, trees_per_size=2 if quick else 4))
    for label, G in graphs:
        if _detector.run_full(G).found:
            false_pos.append(label)
        if G.n <= ORACLE_LIMIT:
            oracle_checked += 1
            if oracle_report(G).exists:
                false_pos.append(label + " (oracle)")
    return CriterionResult(4, "negative families", not false_pos,
                           f"{len(graphs)} graphs ({oracle_checked} oracle-checked), "
                           f"{len(false_pos)} false positives")


def _cleaning_corpus(quick: bool):
    yield from random_corpus(seeds=3 if quick else 30)
    yield from subdivision_corpus(10 if quick else 12)
    yield from planted_corpus(40 if quick else 200)


def criterion_cleaning_fixpoint(quick: bool = False) -> CriterionResult:
    pairs = violations = 0
    fixpoints: dict = {}
    for _, G in _cleaning_corpus(quick):
        for pair in candidate_stream(G):
            pairs += 1
            H, F = pair.graph, pair.frame
            key = (H, frozenset(F.a))
            if key not in fixpoints:
                fixpoints[key] = no_centre_fixpoint(H, F.a)
            if not is_frame_in(H, F) or not fixpoints[key]:
                violations += 1
    return CriterionResult(5, "cleaning fixpoint invariant", violations == 0,
                           f"{pairs} candidate pairs, {violations} violations")


@lru_cache(maxsize=2)
def harvest_trackable(quick: bool = False) -> tuple[TrackableWitness, ...]:
    """Oracle-verified trackable pairs from the small-graph corpus."""
    found = {}
    for _, G in harvest_corpus(quick):
        if find_doily_upto(G, 8) is not None:
            continue
        for pair in candidate_stream(G):
            key = (pair.graph, pair.frame)
            if key in found:
                continue
            found[key] = verify_trackable(pair.graph, pair.frame)
    return tuple(w for w in found.values() if w is not None)


def _harvest_detail(witnesses) -> str:
    with_outside = sum(1 for w in witnesses if w.graph.n > w.min_size)
    return f"{len(witnesses)} trackable pairs ({with_outside} with outside vertices)"


def criterion_no_major(quick: bool = False) -> CriterionResult:
    witnesses = harvest_trackable(quick)
    bad = sum(1 for w in witnesses if not no_major_check(w.graph, w.frame, w))
    return CriterionResult(6, "every outside vertex minor", bool(witnesses) and bad == 0,
                           f"{_harvest_detail(witnesses)}, {bad} with a non-minor vertex")


def criterion_nojumps(quick: bool = False) -> CriterionResult:
    witnesses = harvest_trackable(quick)
    checks = bad = 0
    for w in witnesses:
        for K in w.framed:
            for i in range(3):
                checks += 1
                bad += not nojumps_check(w.graph, K, i)
    return CriterionResult(7, "no shortcuts around an attachment point", checks > 0 and bad == 0,
                           f"{checks} (doily, index) checks, {bad} violations")


def criterion_replacement(quick: bool = False) -> CriterionResult:
    witnesses = harvest_trackable(quick)
    checks = bad = 0
    for w in witnesses:
        for K in w.framed:
            for i in range(3):
                checks += 1
                bad += not replacement_check(w.graph, K, w.frame, i)
    return CriterionResult(8, "shortest-path replacement", checks > 0 and bad == 0,
                           f"{checks} replacements, {bad} violations")


def criterion_detector_identity(quick: bool = False) -> CriterionResult:
    rng = random.Random(2024)
    total = bad = 0
    for label, G, L, pos in bare_doilies(12 if quick else 16):
        for relabel in (False, True):
            H = G
            if relabel:
                perm = list(range(G.n))
                rng.shuffle(perm)
                H = from_edge_list(G.n, [(perm[u], perm[v]) for u, v in G.edges()])
            K = certificate_for(H, H.vertices())
            total += 1
            got = _detector.detect_from_candidate(_detector.direct_pair(H, frame_of(K)))
            if got is None or set(got.vertices) != set(K.vertices):
                bad += 1
    return CriterionResult(9, "detector identity on bare doilies", bad == 0,
                           f"{total} doilies, {bad} mismatches")


def _timing_instance(cycle_length: int, seed: int):
    """Bare doily plus as many noise vertices, each joined to two random
    non-frame vertices, so |E| stays proportional to |V|."""
    L = cycle_length
    G = planted_doily(L, (0, L // 3, 2 * L // 3))
    K = certificate_for(G, G.vertices())
    F = frame_of(K)
    protected = set(F.a) | set(F.b)
    rng = random.Random(seed)
    edges = G.edges()
    pool = [v for v in range(G.n) if v not in protected]
    n = G.n
    for k in range(L):
        v = n + k
        for u in rng.sample(pool, 2):
            edges.append((u, v))
        pool.append(v)
    H = from_edge_list(n + L, edges)
    return _detector.direct_pair(H, F)


def _median_runtime(pair, trials: int) -> float:
    times = []
    for _ in range(trials):
        t0 = time.perf_counter()
        _detector.detect_from_candidate(pair)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def criterion_linear_time(quick: bool = False) -> CriterionResult:
    base = 500 if quick else 1000
    trials = 15 if quick else TIMING_TRIALS
    small, large = _timing_instance(base, 1), _timing_instance(2 * base, 2)
    _median_runtime(small, 3)
    t_small = _median_runtime(small, trials)
    t_large = _median_runtime(large, trials)
    ratio = t_large / t_small
    return CriterionResult(10, "detector runtime scaling", ratio <= RUNTIME_RATIO_LIMIT,
                           f"|V|+|E| {small.graph.n + small.graph.m} -> {large.graph.n + large.graph.m}, "
                           f"median ratio {ratio:.2f} (limit {RUNTIME_RATIO_LIMIT})")


def suite_outputs(quick: bool = True) -> str:
    """Deterministic JSON transcript of detector, oracle and probe outputs."""
    from .probes import probe_report

    records = []
    graphs = list(random_corpus(seeds=3 if quick else 30))
    graphs += list(subdivision_corpus(10 if quick else 12))
    graphs += list(planted_corpus(40 if quick else 200))
    for label, G in graphs:
        stats = _detector.StreamStats()
        out = _detector.run_full(G, stats)
        rec = {"graph": label, "detect": out.to_json(), "stats": stats.to_json()}
        if G.n <= 11:
            rec["oracle"] = oracle_report(G).to_json()
        if out.certificate is not None:
            rec["probe"] = probe_report(G, out.certificate)
        records.append(rec)
    return json.dumps(records, sort_keys=True, separators=(",", ":"))


def criterion_determinism(quick: bool = False) -> CriterionResult:
    code = f"from doily.acceptance import suite_outputs; import sys; sys.stdout.write(suite_outputs({quick!r}))"
    outputs = []
    for hash_seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=hash_seed)
        proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, check=True)
        outputs.append(proc.stdout)
    same = outputs[0] == outputs[1] and outputs[0] == suite_outputs(quick).encode()
    return CriterionResult(11, "determinism", same,
                           f"{len(outputs[0])} bytes per run, {'identical' if same else 'DIFFERENT'}")


CRITERIA: dict[int, Callable[[bool], CriterionResult]] = {
    1: criterion_oracle_equivalence,
    2: criterion_subdivisions,
    3: criterion_planted,
    4: criterion_negatives,
    5: criterion_cleaning_fixpoint,
    6: criterion_no_major,
    7: criterion_nojumps,
    8: criterion_replacement,
    9: criterion_detector_identity,
    10: criterion_linear_time,
    11: criterion_determinism,
}


def run_all(quick: bool = False, only=None, report=print) -> list[CriterionResult]:
    results = []
    for number, fn in CRITERIA.items():
        if only and number not in only:
            continue
        res = fn(quick)
        if report is not None:
            report(res.line())
        results.append(res)
    return results
