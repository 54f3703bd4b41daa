import json
import subprocess
import sys

import pytest

from beaverbench.cli import main
from beaverbench.logic import FULL, Proof, check_proof, parse


@pytest.fixture(scope="module")
def table(tmp_path_factory):
    d = tmp_path_factory.mktemp("bb")
    for n in (1, 2):
        assert main(["bb", "certify", "--states", str(n), "--budget", "100",
                     "--out-dir", str(d), "--table-out", str(d / "bb.json")]) == 0
    return d / "bb.json"


def read(path):
    return path.read_bytes()


def test_certify_outputs(table, capsys):
    d = table.parent
    rec = json.loads((d / "bb-n2.json").read_text())
    assert (rec["s_value"], rec["sigma_value"], rec["status"]) == (6, 4, "Certified")
    meta = json.loads((d / "bb-n2.json.meta.json").read_text())
    assert {"argv", "started", "elapsed_seconds", "version"} <= set(meta)
    assert "started" not in rec
    lines = (d / "bb-n2.jsonl").read_text().splitlines()
    assert len(lines) == rec["machines"]
    assert [r["n"] for r in json.loads(table.read_text())["records"]] == [1, 2]
    assert not list(d.glob(".*.tmp"))


def test_certify_deterministic_across_workers(tmp_path):
    outs = []
    for w in (1, 2, 8):
        d = tmp_path / f"w{w}"
        assert main(["bb", "certify", "--states", "2", "--budget", "100", "--out-dir", str(d),
                     "--workers", str(w), "--figure", str(d / "f.png")]) == 0
        outs.append((read(d / "bb-n2.json"), read(d / "bb-n2.jsonl"), read(d / "f.png")))
    assert outs[0] == outs[1] == outs[2]


def test_checkpoint_reused(tmp_path):
    ck = tmp_path / "ck.jsonl"
    args = ["bb", "certify", "--states", "2", "--budget", "100", "--out-dir", str(tmp_path),
            "--checkpoint", str(ck)]
    assert main(args) == 0
    first = read(tmp_path / "bb-n2.json")
    n = len(ck.read_text().splitlines())
    assert main(args) == 0
    assert len(ck.read_text().splitlines()) == n
    assert read(tmp_path / "bb-n2.json") == first


def test_lookup_and_env(table, capsys, monkeypatch):
    assert main(["bb", "lookup", "--size", "2", "--table", str(table)]) == 0
    assert json.loads(capsys.readouterr().out) == {"size": 2, "function": "S", "status": "Known", "bound": 6}
    monkeypatch.setenv("BEAVERBENCH_TABLE", str(table))
    assert main(["bb", "lookup", "--size", "4", "--function", "sigma"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "Unknown" and out["lower_bound"] == 4


def test_bound_commands(table, capsys, tmp_path):
    assert main(["bound", "compose", "--sizes", "1,1", "--table", str(table)]) == 0
    assert "bound 6" in capsys.readouterr().out
    assert main(["bound", "compose", "--sizes", "2,2", "--table", str(table), "--out", str(tmp_path / "b.json")]) == 0
    assert json.loads((tmp_path / "b.json").read_text())["bb_status"]["status"] == "Unknown"
    assert main(["bound", "decide", "--machine", "1RB 1LB ; 1LA 1RH", "--table", str(table)]) == 0
    assert json.loads(capsys.readouterr().out.splitlines()[-1])["verdict"] == "CounterexampleExists"


def test_pi1(tmp_path, capsys):
    assert main(["pi1", "list"]) == 0
    assert "goldbach" in capsys.readouterr().out
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["pi1", "hunt", "--predicate", "not_carmichael", "--budget", "5000", "--out", str(a)]) == 0
    assert main(["pi1", "hunt", "--predicate", "not_carmichael", "--budget", "5000", "--out", str(b),
                 "--workers", "2"]) == 0
    assert read(a) == read(b)
    assert json.loads(a.read_text())["x"] == 561


def test_pump_writes_checkable_proof(tmp_path):
    pf = tmp_path / "pf.json"
    assert main(["pump", "--target", "p->p", "--axioms", "A1,A2", "--max-size", "80",
                 "--proof-out", str(pf)]) == 0
    proof = Proof.from_json(json.loads(pf.read_text()))
    assert proof.line_count == 5 and check_proof(FULL, parse("p->p"), proof)


def test_census_and_sweep_deterministic(tmp_path):
    outs = []
    for w in (1, 2):
        c, s, f = tmp_path / f"c{w}.jsonl", tmp_path / f"s{w}.jsonl", tmp_path / f"c{w}.png"
        assert main(["census", "--max-size", "70", "--vars", "1", "--sentence-cap", "5",
                     "--out", str(c), "--figure", str(f), "--workers", str(w)]) == 0
        assert main(["sweep", "--axioms", "A1,A2", "--max-sentence-size", "4", "--vars", "1",
                     "--out", str(s), "--workers", str(w)]) == 0
        outs.append((read(c), read(s), read(f)))
    assert outs[0] == outs[1]


@pytest.mark.parametrize("argv,code", [
    (["pump", "--target", "p->", "--max-size", "10"], 3),
    (["hunt", "--sentence", "(p->q"], 3),
    (["bound", "decide", "--machine", "1RB 1X", "--table", "x"], 3),
    (["pump", "--target", "p->q", "--max-size", "10", "--vars", "1"], 2),
    (["pump", "--target", "p->p", "--axioms", "A1,A7", "--max-size", "10"], 2),
    (["pump", "--target", "p->p", "--max-size", "0"], 2),
    (["pi1", "hunt", "--predicate", "nope", "--budget", "5"], 2),
    (["pi1", "hunt", "--predicate", "lt5", "--budget", "0"], 2),
    (["bb", "lookup", "--size", "2", "--table", "/nonexistent/bb.json"], 2),
    (["bound", "compose", "--sizes", "a,b", "--table", "/nonexistent"], 2),
    (["bb", "certify", "--states", "1", "--budget", "5", "--detectors", "magic"], 2),
    (["frobnicate"], 2),
    (["pump", "--target", "~~p->p", "--max-size", "2000", "--node-budget", "50", "--max-given", "0"], 4),
    (["census", "--axioms", "A1,A2", "--max-size", "200", "--sentence-cap", "5", "--node-budget", "10"], 4),
    (["pump", "--target", "p->q", "--max-size", "20"], 0),
    (["hunt", "--sentence", "p->q"], 0),
])
def test_exit_codes(argv, code, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(argv) == code


def test_console_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "beaverbench", "hunt", "--sentence", "p->q"],
                       capture_output=True, text=True, cwd=tmp_path)
    assert r.returncode == 0 and "Refuted" in r.stdout
    r = subprocess.run([sys.executable, "-m", "beaverbench", "pump", "--target", "p->"],
                       capture_output=True, text=True, cwd=tmp_path)
    assert r.returncode == 2  # missing --max-size is a usage error
