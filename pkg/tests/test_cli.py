import json
import subprocess
import sys

import pytest

from heckoid import harness
from heckoid.algebra import ElementClass
from heckoid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_word(capsys):
    assert run(capsys, "word", "2/5") == (0, "abaBAbabAB\n")


def test_cs(capsys):
    code, out = run(capsys, "cs", "2/5")
    assert code == 0 and json.loads(out) == [2, 3, 2, 3]
    assert run(capsys, "cs", "1/4", "--format", "text") == (0, "((4,4))\n")


def test_reduce(capsys):
    code, out = run(capsys, "reduce", "1/5", "-n", "2", "--trace")
    obj = json.loads(out)
    assert code == 0 and obj["canonical"] == "1/1"
    assert [s["map"] for s in obj["steps"]] == ["g3", "g1"]
    assert obj["generators"] == ["g3", "g1"]


def test_decide(capsys):
    code, out = run(capsys, "decide", "ab", "--index", "4")
    obj = json.loads(out)
    assert obj["class"] == "torsion" and obj["detail"]["order"] == 4
    code, out = run(capsys, "decide", "2/5", "--index", "4", "--format", "text")
    assert out.startswith("generic")


def test_conjugate(capsys):
    code, out = run(capsys, "conjugate", "1/5", "1", "-n", "2")
    assert code == 0 and json.loads(out)["up_to_inversion"] is True
    code, out = run(capsys, "conjugate", "1/2", "1/3", "-n", "4")
    assert json.loads(out) == {"conjugate": False, "up_to_inversion": False}


def test_rep(capsys):
    code, out = run(capsys, "rep", "ab", "-n", "2")
    obj = json.loads(out)
    assert code == 0 and obj["class"] == "elliptic" and abs(obj["trace"]) < 1e-12


def test_verify_writes_file(tmp_path, capsys):
    path = tmp_path / "report.jsonl"
    code, out = run(capsys, "verify", "main", "-n", "3", "--max-denominator", "6",
                    "--pair-denominator", "6", "--out", str(path))
    assert code == 0 and out == ""
    last = json.loads(path.read_text().splitlines()[-1])
    assert last["type"] == "summary" and last["ok"]


def test_verify_exit_code_on_counterexample(monkeypatch, capsys):
    monkeypatch.setattr(harness, "classify", lambda w, n: ElementClass("trivial"))
    code, _ = run(capsys, "verify", "main", "-n", "3", "--max-denominator", "4", "--oracle", "exact")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["word", "oops"],
    ["word", "∞"],
    ["cs", "3/2"],
    ["decide", "x/y", "-n", "3"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["decide", "ab"], ["decide", "ab", "-n", "1"], ["nope"], []])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "heckoid", "word", "1/3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "abaBAB"
