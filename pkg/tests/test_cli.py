import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from fnfdecomp.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(argv, capsys, monkeypatch, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_figure1_certify(capsys, monkeypatch):
    code, out, _ = run(["analyze", str(DATA / "figure1.json"), "--certify"], capsys, monkeypatch)
    assert code == 0
    doc = json.loads(out)
    assert doc["blocks"] == [["0", "3", "8"], ["0", "3", "8", "9"]]
    assert doc["paper_components"] == [[2, 4, 6], [1, 3, 5, 7]]
    certs = doc["certificates"]
    assert certs["chain"] == [{"source": 0, "target": 1, "shift": 1, "vertex_map": [[1, 2], [3, 4], [5, 6]]}]
    assert certs["principal_submatrices"] == [{"small": 0, "large": 1, "index_set": [1, 2, 3]}]
    assert certs["converse"]["holds"] is True


def test_analyze_zero_order_five(capsys, monkeypatch):
    inst = json.dumps({"kind": "toeplitz", "symbols": ["0"] * 5})
    code, out, _ = run(["analyze"], capsys, monkeypatch, stdin=inst)
    doc = json.loads(out)
    assert code == 0 and len(doc["blocks"]) == 5 and doc["sigma"] == list(range(5))


def test_analyze_figure2(capsys, monkeypatch):
    code, out, _ = run(["analyze", str(DATA / "figure2.json"), "--certify"], capsys, monkeypatch)
    doc = json.loads(out)
    assert code == 0
    assert doc["sigma"] == list(range(8))
    assert len(doc["blocks"]) == 2
    w = doc["certificates"]["hankel_witness"]
    assert (w["first"], w["second"], w["relation"]) == (0, 1, "none")


def test_analyze_dense(capsys, monkeypatch):
    code, out, _ = run(["analyze", "--dense", str(DATA / "figure2.csv")], capsys, monkeypatch)
    assert code == 0 and json.loads(out)["kind"] == "hankel"


def test_analyze_text(capsys, monkeypatch):
    code, out, _ = run(
        ["analyze", str(DATA / "converse.json"), "--certify", "--format", "text"], capsys, monkeypatch
    )
    assert code == 0
    assert "block 0: T[0]" in out and "block 2: T[0,1]" in out
    assert "converse: FAILS for equal blocks" in out


def test_analyze_parse_error(capsys, monkeypatch):
    code, _, err = run(["analyze"], capsys, monkeypatch, stdin='{"kind": ')
    assert code == 1 and "error" in err


def test_analyze_dense_unstructured(capsys, monkeypatch):
    code, _, err = run(["analyze", "--dense"], capsys, monkeypatch, stdin="1,2\n3,4\n")
    assert code == 2 and "neither" in err


def test_missing_file(capsys, monkeypatch, tmp_path):
    code, _, _ = run(["analyze", str(tmp_path / "nope.json")], capsys, monkeypatch)
    assert code == 1


def test_bad_subcommand(capsys, monkeypatch):
    code, _, _ = run(["explode"], capsys, monkeypatch)
    assert code == 1


def _analyze_to(path_in, tmp_path, capsys, monkeypatch, certify=True):
    argv = ["analyze", str(path_in)] + (["--certify"] if certify else [])
    _, out, _ = run(argv, capsys, monkeypatch)
    p = tmp_path / "dec.json"
    p.write_text(out)
    return p


def test_verify_figure1(tmp_path, capsys, monkeypatch):
    dec = _analyze_to(DATA / "figure1.json", tmp_path, capsys, monkeypatch)
    code, out, _ = run(["verify", str(DATA / "figure1.json"), str(dec)], capsys, monkeypatch)
    assert code == 0
    assert "overall: PASS" in out


def test_verify_tampered_sigma(tmp_path, capsys, monkeypatch):
    dec = _analyze_to(DATA / "figure1.json", tmp_path, capsys, monkeypatch)
    doc = json.loads(dec.read_text())
    doc["sigma"][0] = doc["sigma"][1]
    dec.write_text(json.dumps(doc))
    code, out, err = run(["verify", str(DATA / "figure1.json"), str(dec), "--format", "json"], capsys, monkeypatch)
    assert code == 3
    rep = json.loads(out)
    failed = [c["name"] for c in rep["checks"] if not c["passed"]]
    assert "reconstruction" in failed
    assert "reconstruction" in err


def test_verify_tampered_certificate(tmp_path, capsys, monkeypatch):
    dec = _analyze_to(DATA / "figure1.json", tmp_path, capsys, monkeypatch)
    doc = json.loads(dec.read_text())
    doc["certificates"]["principal_submatrices"][0]["index_set"] = [0, 1, 3]
    dec.write_text(json.dumps(doc))
    code, out, _ = run(["verify", str(DATA / "figure1.json"), str(dec)], capsys, monkeypatch)
    assert code == 3 and "FAIL  document certificates" in out


def test_verify_order_one(tmp_path, capsys, monkeypatch):
    inst = tmp_path / "one.json"
    inst.write_text('{"kind": "toeplitz", "symbols": ["0"]}')
    dec = tmp_path / "dec.json"
    dec.write_text('{"kind":"toeplitz","n":1,"sigma":[0],"components":[[0]],"blocks":[["0"]]}')
    code, _, _ = run(["verify", str(inst), str(dec)], capsys, monkeypatch)
    assert code == 0


def test_verify_parse_error(tmp_path, capsys, monkeypatch):
    dec = tmp_path / "dec.json"
    dec.write_text("{")
    code, _, _ = run(["verify", str(DATA / "figure1.json"), str(dec)], capsys, monkeypatch)
    assert code == 1


def test_generate_zero(capsys, monkeypatch):
    code, out, _ = run(["generate", "toeplitz", "7", "0.0", "--seed", "1"], capsys, monkeypatch)
    assert code == 0 and json.loads(out)["symbols"] == ["0"] * 7


def test_generate_full(capsys, monkeypatch):
    code, out, _ = run(["generate", "toeplitz", "7", "1.0", "--weights", "3", "--seed", "1"], capsys, monkeypatch)
    assert json.loads(out)["symbols"] == ["3"] * 7


def test_generate_bad_params(capsys, monkeypatch):
    assert run(["generate", "toeplitz", "0", "0.5"], capsys, monkeypatch)[0] == 1
    assert run(["generate", "toeplitz", "4", "2"], capsys, monkeypatch)[0] == 1
    assert run(["generate", "toeplitz", "4", "0.5", "--weights", "a:b"], capsys, monkeypatch)[0] == 1


def test_generate_deterministic(capsys, monkeypatch):
    argv = ["generate", "hankel", "30", "0.2", "--seed", "5", "--weights=-4:4"]
    assert run(argv, capsys, monkeypatch)[1] == run(argv, capsys, monkeypatch)[1]


def test_from_dense(capsys, monkeypatch):
    code, out, _ = run(["from-dense", str(DATA / "figure2.csv")], capsys, monkeypatch)
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "hankel" and len(doc["symbols"]) == 15


def test_from_dense_unstructured(capsys, monkeypatch):
    code, _, _ = run(["from-dense"], capsys, monkeypatch, stdin="0,1\n2,0\n")
    assert code == 2


@pytest.mark.parametrize("kind,n,density,seed", [("hankel", 8, "0.3", 42), ("toeplitz", 40, "0.1", 7), ("hankel", 64, "0.05", 3)])
def test_shell_pipeline(tmp_path, kind, n, density, seed):
    exe = [sys.executable, "-m", "fnfdecomp"]
    gen = subprocess.run(exe + ["generate", kind, str(n), density, "--seed", str(seed)], capture_output=True, text=True, check=True)
    inst = tmp_path / "inst.json"
    inst.write_text(gen.stdout)
    ana = subprocess.run(exe + ["analyze", str(inst), "--certify"], capture_output=True, text=True, check=True)
    ver = subprocess.run(exe + ["verify", str(inst)], input=ana.stdout, capture_output=True, text=True)
    assert ver.returncode == 0, ver.stdout + ver.stderr
    again = subprocess.run(exe + ["analyze", str(inst), "--certify"], capture_output=True, text=True, check=True)
    assert again.stdout == ana.stdout
