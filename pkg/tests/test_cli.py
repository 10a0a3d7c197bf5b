import io
import json
import os
import subprocess
import sys

import networkx as nx
import pytest

import doily.detector
from doily.cli import main
from doily.generators import gnp

NET_TEXT = "6 6\n0 1\n1 2\n2 0\n0 3\n1 4\n2 5\n"
C9_TEXT = "9 9\n" + "".join(f"{k} {(k + 1) % 9}\n" for k in range(9))


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_detect_exit_codes(monkeypatch, capsys, tmp_path):
    code, out, _ = run(monkeypatch, capsys, ["detect"], NET_TEXT)
    data = json.loads(out)
    assert code == 0 and data["found"] and len(data["vertices"]) == 6
    code, out, _ = run(monkeypatch, capsys, ["detect"], "2 0\n")
    assert code == 1 and json.loads(out) == {"found": False}
    bad = tmp_path / "loop.txt"
    bad.write_text("3 1\n1 1\n")
    code, _, err = run(monkeypatch, capsys, ["detect", "--input", str(bad)])
    assert code == 2 and "loop" in err
    code, _, err = run(monkeypatch, capsys, ["detect", "--input", str(tmp_path / "missing")])
    assert code == 2


def test_detect_json_roundtrip(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["detect"], NET_TEXT)
    data = json.loads(out)
    assert json.loads(json.dumps(data, sort_keys=True)) == data
    assert set(data) == {"found", "vertices", "cycle", "tufts", "step"}
    assert all(set(t) == {"tuft", "attach"} for t in data["tufts"])


def test_detect_graph6_and_text(monkeypatch, capsys):
    g6 = nx.to_graph6_bytes(nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]), header=False).decode()
    code, out, _ = run(monkeypatch, capsys, ["detect", "--format", "graph6", "--output", "text"], g6)
    assert code == 0 and out.startswith("doily on 6 vertices")


def test_oracle_command(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["oracle"], NET_TEXT)
    assert code == 0 and json.loads(out) == {"exists": True, "min_size": 6}
    code, out, _ = run(monkeypatch, capsys, ["oracle"], C9_TEXT)
    assert code == 1 and json.loads(out)["exists"] is False
    big = "30 0\n"
    code, _, err = run(monkeypatch, capsys, ["oracle"], big)
    assert code == 2 and "22" in err
    code, _, _ = run(monkeypatch, capsys, ["oracle", "--oracle-limit", "5"], NET_TEXT)
    assert code == 2
    code, out, _ = run(monkeypatch, capsys, ["oracle", "--all-min"], NET_TEXT)
    assert len(json.loads(out)["all_min_doilies"]) == 1


def test_deterministic_forbids_threads(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["detect", "--deterministic", "--threads", "2"], NET_TEXT)
    assert code == 2 and "deterministic" in err
    monkeypatch.setenv("DOILY_THREADS", "4")
    code, _, _ = run(monkeypatch, capsys, ["detect", "--deterministic"], NET_TEXT)
    assert code == 0


def test_gen_roundtrip(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["gen", "gnp", "--n", "10", "--p", "0.3", "--seed", "7"])
    assert code == 0 and out.splitlines()[0] == f"10 {gnp(10, 0.3, 7).m}"
    _, planted, _ = run(monkeypatch, capsys, ["gen", "planted", "--cycle-length", "9", "--tufts", "0,3,6"])
    code, _, _ = run(monkeypatch, capsys, ["detect"], planted)
    assert code == 0
    _, sub, _ = run(monkeypatch, capsys, ["gen", "subdivision", "--branches", "1,1,2", "--arcs", "2,1,1"])
    assert sub.splitlines()[0].split()[0] == "8"
    code, _, _ = run(monkeypatch, capsys, ["gen", "planted", "--tufts", "0,0,1"])
    assert code == 2


def test_probe_command(monkeypatch, capsys, tmp_path):
    graph = tmp_path / "g.txt"
    graph.write_text("13 13\n" + "".join(f"{k} {(k + 1) % 9}\n" for k in range(9))
                     + "9 0\n10 3\n11 6\n12 4\n")
    code, out, _ = run(monkeypatch, capsys, ["probe", "--input", str(graph)])
    report = json.loads(out)
    assert code == 0 and report["profiles"][0]["classification"] == "minor"
    cert = tmp_path / "k.json"
    cert.write_text(json.dumps(report["certificate"]))
    code, out2, _ = run(monkeypatch, capsys, ["probe", "--input", str(graph), "--certificate", str(cert)])
    assert code == 0 and json.loads(out2) == report
    cert.write_text(json.dumps({"cycle": [0, 1, 2], "tufts": []}))
    code, _, _ = run(monkeypatch, capsys, ["probe", "--input", str(graph), "--certificate", str(cert)])
    assert code == 2
    code, _, _ = run(monkeypatch, capsys, ["probe"], C9_TEXT)
    assert code == 1


def test_bench_counters(monkeypatch, capsys):
    text = "12 12\n" + "".join(f"{k} {(k + 1) % 9}\n" for k in range(9)) + "9 0\n10 3\n11 6\n"
    code, out, _ = run(monkeypatch, capsys, ["bench"], text)
    data = json.loads(out)
    assert code == 0 and data["step"] == "candidates" and data["candidates"] >= 1
    assert "seconds" not in data
    _, out, _ = run(monkeypatch, capsys, ["bench", "--timing"], text)
    assert "seconds" in json.loads(out)


def test_selftest_quick(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["selftest", "--quick", "--output", "text", "--only", "1,2,3,9"])
    assert code == 0
    assert out.count("[PASS]") == 4 and "4/4 criteria passed" in out


def test_selftest_time_budget(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["selftest", "--quick", "--only", "9", "--time-budget", "0"])
    assert code == 1 and json.loads(out)["passed"] is False


def test_selftest_catches_broken_detector(monkeypatch, capsys):
    monkeypatch.setattr(doily.detector, "detect_from_candidate", lambda pair, stats=None: None)
    code, out, _ = run(monkeypatch, capsys, ["selftest", "--quick", "--output", "text", "--only", "2,9"])
    assert code == 1 and out.count("[FAIL]") == 2


def test_module_entry_point():
    env = dict(os.environ)
    proc = subprocess.run([sys.executable, "-m", "doily", "detect"], input=NET_TEXT,
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and json.loads(proc.stdout)["found"]


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
