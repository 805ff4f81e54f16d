import json
import shutil
import subprocess

import pytest

from zigzag.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dump_b2(capsys):
    code, out, _ = run(capsys, "dump", "--type", "b", "--rank", "2")
    data = json.loads(out)
    assert code == 0 and len(data["basis"]) == 10
    names = {b["name"] for b in data["basis"]}
    assert "(1|2)(ie2)" in names


def test_verify_braid_relations(capsys):
    code, out, _ = run(capsys, "verify", "braid-relations", "--side", "b", "--rank", "2")
    data = json.loads(out)
    assert code == 0 and data["failed"] == 0
    assert all(r["status"] == "ok" for r in data["results"])


def test_intersect_matches_poincare(capsys):
    code, out, _ = run(capsys, "intersect", "--rank", "2", "--left", "b1",
                       "--right-word", "2 1", "--right", "b2", "--check")
    data = json.loads(out)
    assert code == 0 and data["agree"] and data["intersection"] == data["poincare"]
    code, out, _ = run(capsys, "poincare", "--rank", "2", "--source", "1",
                       "--target-word", "2 1", "--target", "2", "--format", "text")
    assert out.strip() == data["intersection"]


def test_curve_commands(capsys):
    code, out, _ = run(capsys, "curve", "act", "--word", "1 2", "--base", "b2")
    assert code == 0 and "crossings" in json.loads(out)
    code, out, _ = run(capsys, "curve", "intersect", "--rank", "2", "--left-word", "",
                       "--left", "b1", "--right-word", "2 1", "--right", "b2")
    assert code == 0 and json.loads(out)["intersection"]


def test_k0_commands(capsys):
    code, out, _ = run(capsys, "k0", "matrix", "--side", "b", "--rank", "3", "--gen", "1")
    assert code == 0 and json.loads(out)["matrix"][0][:2] == ["-q*s", "-1 - s"]
    code, out, _ = run(capsys, "k0", "verify-square", "--rank", "3")
    assert code == 0 and json.loads(out)["ok"]


def test_act_extend_minimize_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "act", "--rank", "2", "--word", "2 1 2", "--source", "1")
    src = tmp_path / "c.json"
    src.write_text(out)
    dst = tmp_path / "cA.json"
    code, out, _ = run(capsys, "extend", "--rank", "2", "--in", str(src), "--out", str(dst))
    assert code == 0 and json.loads(dst.read_text()) == json.loads(out)
    code, out, _ = run(capsys, "minimize", "--in", str(dst))
    assert code == 0 and json.loads(out)["algebra"] == {"type": "a", "rank": 3}


def test_lift(capsys):
    code, out, _ = run(capsys, "lift", "--rank", "3", "--base", "b2", "--complex")
    data = json.loads(out)
    assert code == 0 and len(data["lift"]["components"]) == 2 and "L_A" in data


@pytest.mark.parametrize("argv", [
    ["act", "--rank", "2", "--word", "3"],
    ["act", "--rank", "1"],
    ["act", "--rank", "2", "--word", "1 x"],
    ["intersect", "--rank", "2", "--left", "b5", "--right", "b1"],
    ["minimize", "--in", "/nonexistent.json"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_deterministic_output(capsys):
    argv = ["act", "--rank", "3", "--word", "2 -1 3 2"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


@pytest.mark.skipif(shutil.which("zigzag") is None, reason="console script not installed")
def test_console_script():
    p = subprocess.run(["zigzag", "dump", "--type", "a", "--rank", "3", "--format", "text"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.startswith("A3")


def test_verification_failure_exit_code(capsys, monkeypatch):
    from zigzag import verify
    monkeypatch.setitem(verify.SUITES, "k0", lambda rank, side="b", seed=0: [
        {"suite": "k0", "tag": "decat-square", "case": "forced", "ok": False}])
    code, out, _ = run(capsys, "verify", "k0", "--format", "text")
    report = json.loads(out)
    assert code == 1 and report["results"][0]["tag"] == "decat-square"
