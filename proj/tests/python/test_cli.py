import json
import os
import subprocess

import pytest

CLI = os.environ.get("LCLAB_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="LCLAB_CLI not set")


def run(*args, env=None):
    full = dict(os.environ, **(env or {}))
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full)


def test_frobenius_rp2():
    r = run("frobenius", "--family", "sr n=6 nonfaces=RP2", "--p", "2", "--j", "3")
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert rep["verdict"] == "non-nilpotent" and rep["dim"] == 1


def test_ideal_file(tmp_path):
    f = tmp_path / "det.txt"
    f.write_text("ring: char=0 vars=6\nx1*x5 - x2*x4\nx1*x6 - x3*x4\nx2*x6 - x3*x5\n")
    r = run("torsion", "--ideal", str(f), "--p", "3", "--k", "2")
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert rep["verdict"] == "NILPOTENT"
    assert "not checked" in rep["unchecked_hypothesis"]


def test_exit_codes(tmp_path):
    assert run("frobenius", "--family", "generic m=2 n=3 t=2", "--p", "6", "--j", "3").returncode == 1
    assert run("frobenius", "--p", "2").returncode == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("x1 + x2\n")
    assert run("lcdim", "--ideal", str(bad), "--j", "1", "--s", "0").returncode == 1
    r = run("frobenius", "--family", "generic m=2 n=3 t=2", "--p", "2", "--j", "4", env={"LCLAB_STAGE_CAP": "4"})
    assert r.returncode == 2
    assert json.loads(r.stdout)["verdict"] == "undetected"
    assert r.stderr


def test_output_file_and_determinism(tmp_path):
    out = tmp_path / "report.json"
    texts = []
    for _ in range(2):
        assert run("-o", str(out), "cert", "valla").returncode == 0
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]
    assert json.loads(texts[0])["success"]


def test_ffmod_split(tmp_path):
    # N = F_2 with f = id, M = F_2^2 with f(e1) = e1, f(e2) = e1 + e2: no equivariant section over F_2
    m = tmp_path / "split.txt"
    m.write_text("M:\n1 1\n0 1\nN:\n1\nproj:\n0 1\n")
    r = run("ffmod", "split", "--matrix", str(m), "--field", "GF(2)")
    rep = json.loads(r.stdout)
    assert r.returncode == 0
    assert rep["split"]["ok"] and rep["split"]["extension_steps"] == 1
