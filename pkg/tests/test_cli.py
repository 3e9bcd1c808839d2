import json
import subprocess
import sys
from pathlib import Path

import pytest

from adfsem.cli import run

ROOT = Path(__file__).resolve().parent.parent
INST = ROOT / "instances"


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_stable(capsys):
    code, out, _ = call(capsys, "solve", INST / "D1.adf", "--semantics", "stable")
    assert code == 0 and out == "{a,b}\n"


def test_solve_json(capsys):
    code, out, _ = call(capsys, "solve", INST / "D2.adf", "--semantics", "aa-preferred", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["semantics"] == "aa-preferred"
    assert doc["extensions"] == [["a"], ["b", "c"]]
    assert doc["instance"] == "D2"


def test_solve_several_semantics(capsys):
    code, out, _ = call(capsys, "solve", INST / "D1.adf", "--semantics", "naive,grounded")
    assert out == "[naive]\n{a,b,c}\n[grounded]\n{}\n"
    code, out, _ = call(capsys, "solve", INST / "D1.adf", "--semantics", "naive,grounded", "--format", "json")
    assert [r["semantics"] for r in json.loads(out)["results"]] == ["naive", "grounded"]


def test_labelings(capsys):
    code, out, _ = call(capsys, "labelings", INST / "D2.adf")
    assert out.split() == ["{a:t,b:f,c:f,d:t}", "{a:t,b:f,c:f,d:f}", "{a:f,b:t,c:t,d:f}", "{a:f,b:t,c:f,d:t}"]
    code, out, _ = call(capsys, "labelings", INST / "A1.adf", "--semantics", "preferred", "--format", "json")
    assert json.loads(out)["labelings"] == [{"a": "u", "b": "u", "c": "t"}]


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", INST / "D2.adf")
    assert code == 0
    assert out.rstrip().splitlines()[-1].endswith("0 failures")
    code, out, _ = call(capsys, "verify", "--random", "3", "--size", "3", "--format", "json", "--oracle")
    assert code == 0 and json.loads(out)["ok"]


def test_convert(capsys):
    code, out, _ = call(capsys, "convert", INST / "mutual.apx")
    assert code == 0
    assert out == "s(a).\ns(b).\ns(c).\nac(a,neg(b)).\nac(b,neg(a)).\nac(c,neg(b)).\n"


def test_exit_codes(capsys, tmp_path):
    assert call(capsys, "solve", INST / "D1.adf", "--semantics", "bogus")[0] == 1
    assert call(capsys, "solve", tmp_path / "missing.adf")[0] == 1
    assert call(capsys, "verify")[0] == 1
    bad = tmp_path / "bad.adf"
    bad.write_text("s(a). ac(a, and(a).")
    code, _, err = call(capsys, "solve", bad)
    assert code == 2 and "line 1" in err
    assert call(capsys, "solve", INST / "D2.adf", "--max-statements", "3", "--semantics", "naive")[0] == 3
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 1


def test_verify_failure_exit_code(capsys, monkeypatch):
    import adfsem.cli as cli
    from adfsem.verify import Report

    def failing(D, max_statements):
        rep = Report()
        rep.add("forced", D.name, "", False)
        return rep
    monkeypatch.setattr(cli, "run_theorem_suite", failing)
    assert call(capsys, "verify", INST / "D1.adf")[0] == 4


@pytest.mark.parametrize("name", ["D1", "D1p", "D2", "A1", "A2"])
def test_oracle_flag_gives_identical_output(capsys, name):
    _, fast, _ = call(capsys, "solve", INST / f"{name}.adf")
    _, slow, _ = call(capsys, "solve", INST / f"{name}.adf", "--oracle")
    assert fast == slow
    _, fast, _ = call(capsys, "labelings", INST / f"{name}.adf", "--semantics", "admissible,complete,stable")
    _, slow, _ = call(capsys, "labelings", INST / f"{name}.adf", "--semantics", "admissible,complete,stable", "--oracle")
    assert fast == slow


def test_jobs_flag(capsys):
    _, serial, _ = call(capsys, "solve", INST / "D2.adf")
    _, parallel, _ = call(capsys, "solve", INST / "D2.adf", "--jobs", "2")
    assert serial == parallel


def test_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "adfsem", "solve", str(INST / "D2.adf"), "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO((INST / "D1.adf").read_text()))
    code, out, _ = call(capsys, "solve", "-", "--semantics", "stable")
    assert out == "{a,b}\n"
