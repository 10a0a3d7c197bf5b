"""Command-line interface.

Exit codes: 0 found / success, 1 not found / failed check, 2 usage or input
error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .detector import default_threads, run_full
from .frames import StreamStats
from .generators import GenSpec, generate
from .graph import Graph, GraphFormatError, format_edgelist, read_graph
from .recognition import (
    ORACLE_LIMIT,
    DoilyCertificate,
    OracleLimitError,
    certificate_for,
    oracle_report,
)

EXIT_FOUND, EXIT_NOT_FOUND, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str = "-"
    format: str = "edgelist"
    output: str = "json"
    deterministic: bool = False
    threads: int = 1
    oracle_limit: int = ORACLE_LIMIT
    seed: int = 0
    time_budget: float | None = None

    @property
    def parallel(self) -> bool:
        return self.threads > 1


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="graph file, or - for stdin")
    common.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--deterministic", action="store_true",
                        help="sequential candidate search, reproducible certificate")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for the candidate search (default: $DOILY_THREADS or 1)")
    common.add_argument("--oracle-limit", type=int, default=ORACLE_LIMIT)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="doily", description="Detect induced net subdivisions.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("detect", parents=[common], help="decide whether the graph contains a doily")

    p = sub.add_parser("oracle", parents=[common], help="exhaustive ground truth for small graphs")
    p.add_argument("--all-min", action="store_true", help="list every minimum doily")

    p = sub.add_parser("gen", parents=[common], help="emit a generated instance as an edge list")
    p.add_argument("kind", choices=("gnp", "planted", "subdivision"))
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--cycle-length", type=int, default=9)
    p.add_argument("--tufts", type=_int_list, default=(0, 3, 6), help="tuft positions, e.g. 0,3,6")
    p.add_argument("--extra", type=int, default=0, help="noise vertices for planted instances")
    p.add_argument("--branches", type=_int_list, default=(1, 1, 1))
    p.add_argument("--arcs", type=_int_list, default=(1, 1, 1))

    p = sub.add_parser("probe", parents=[common], help="attachment profiles against a certificate")
    p.add_argument("--certificate", help="certificate JSON file (default: run the detector)")

    p = sub.add_parser("bench", parents=[common], help="enumeration counters for one run")
    p.add_argument("--timing", action="store_true", help="include wall-clock seconds")

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    p.add_argument("--quick", action="store_true", help="reduced corpus sizes")
    p.add_argument("--only", type=_int_list, default=None, help="criterion numbers, e.g. 1,5,9")
    p.add_argument("--time-budget", type=float, default=None, help="fail if the suite exceeds this many seconds")
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    threads = args.threads
    if args.deterministic:
        if threads is not None and threads > 1:
            raise UsageError("--deterministic forbids parallel mode (--threads > 1)")
        threads = 1
    elif threads is None:
        threads = default_threads()
    if threads < 1:
        raise UsageError("--threads must be positive")
    return RunConfig(
        command=args.command,
        input=args.input,
        format=args.format,
        output=args.output,
        deterministic=args.deterministic,
        threads=threads,
        oracle_limit=args.oracle_limit,
        seed=args.seed,
        time_budget=getattr(args, "time_budget", None),
    )


def _load(cfg: RunConfig) -> Graph:
    if cfg.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(cfg.input, encoding="ascii") as fh:
                text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise GraphFormatError(f"cannot read {cfg.input}: {exc}")
    return read_graph(text, cfg.format)


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cert_text(cert: DoilyCertificate) -> str:
    tufts = ", ".join(f"{b}-{a}" for b, a in zip(cert.tufts, cert.attach))
    return f"doily on {cert.size} vertices: cycle {' '.join(map(str, cert.cycle))}; tufts {tufts}"


def cmd_detect(cfg: RunConfig) -> int:
    G = _load(cfg)
    out = run_full(G, threads=cfg.threads)
    text = _cert_text(out.certificate) if out.found else "no doily"
    _emit(cfg, out.to_json(), text)
    return EXIT_FOUND if out.found else EXIT_NOT_FOUND


def cmd_oracle(cfg: RunConfig, all_min: bool) -> int:
    G = _load(cfg)
    report = oracle_report(G, enumerate_all_min=all_min, limit=cfg.oracle_limit)
    text = f"minimum doily size {report.min_size}" if report.exists else "no doily"
    _emit(cfg, report.to_json(), text)
    return EXIT_FOUND if report.exists else EXIT_NOT_FOUND


def cmd_gen(cfg: RunConfig, args: argparse.Namespace) -> int:
    spec = GenSpec(
        kind=args.kind, n=args.n, p=args.p, seed=cfg.seed,
        cycle_length=args.cycle_length, tuft_positions=args.tufts, extra_n=args.extra,
        branches=args.branches, arcs=args.arcs,
    )
    sys.stdout.write(format_edgelist(generate(spec)))
    return 0


def cmd_probe(cfg: RunConfig, cert_path: str | None) -> int:
    from .probes import probe_report

    G = _load(cfg)
    if cert_path is None:
        out = run_full(G, threads=cfg.threads)
        if not out.found:
            _emit(cfg, {"found": False}, "no doily")
            return EXIT_NOT_FOUND
        cert = out.certificate
    else:
        try:
            with open(cert_path, encoding="utf-8") as fh:
                cert = DoilyCertificate.from_json(json.load(fh))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise GraphFormatError(f"bad certificate: {exc}")
        if certificate_for(G, cert.vertices) is None:
            raise GraphFormatError("certificate does not induce a doily in this graph")
    report = probe_report(G, cert)
    lines = [_cert_text(cert)] + [
        f"  v={p['v']} {p['classification']} nk={p['nk']}" for p in report["profiles"]
    ]
    _emit(cfg, report, "\n".join(lines))
    return EXIT_FOUND


def cmd_bench(cfg: RunConfig, timing: bool) -> int:
    G = _load(cfg)
    stats = StreamStats()
    t0 = time.perf_counter()
    out = run_full(G, stats)
    elapsed = time.perf_counter() - t0
    payload = {"n": G.n, "m": G.m, "found": out.found, "step": out.step, **stats.to_json()}
    if timing:
        payload["seconds"] = round(elapsed, 6)
    _emit(cfg, payload, " ".join(f"{k}={v}" for k, v in payload.items()))
    return 0


def cmd_selftest(cfg: RunConfig, quick: bool, only) -> int:
    from .acceptance import run_all

    t0 = time.perf_counter()
    results = run_all(quick=quick, only=set(only) if only else None,
                      report=None if cfg.output == "json" else print)
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in results)
    over = cfg.time_budget is not None and elapsed > cfg.time_budget
    if cfg.output == "json":
        print(json.dumps({"passed": ok and not over, "seconds": round(elapsed, 1),
                          "criteria": [r.to_json() for r in results]}, sort_keys=True))
    else:
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed in {elapsed:.1f}s")
        if over:
            print(f"time budget of {cfg.time_budget}s exceeded")
    return 0 if ok and not over else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        if cfg.command == "detect":
            return cmd_detect(cfg)
        if cfg.command == "oracle":
            return cmd_oracle(cfg, args.all_min)
        if cfg.command == "gen":
            return cmd_gen(cfg, args)
        if cfg.command == "probe":
            return cmd_probe(cfg, args.certificate)
        if cfg.command == "bench":
            return cmd_bench(cfg, args.timing)
        return cmd_selftest(cfg, args.quick, args.only)
    except (UsageError, GraphFormatError, OracleLimitError, ValueError) as exc:
        print(f"doily: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
