import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hprimes.cli import RunConfig, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--m", "2", "--p", "2")
    assert code == 0
    assert json.loads(out) == {"m": 2, "p": 2, "enumeration": "14", "vesztergombi": "14",
                               "polyBernoulli": "14", "hspecFormula": "14", "agree": True}


def test_enumerate_stratum(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "2", "--p", "2", "--t", "2")
    assert code == 0 and out == "[3,4,1,2]\n"


def test_enumerate_all(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "3", "--p", "2")
    assert code == 0 and len(out.splitlines()) == 46


def test_no_arguments(capsys):
    code, out, err = run(capsys)
    assert code == 2 and out == "" and "usage" in err


@pytest.mark.parametrize("argv", [["bogus"], ["count", "--m", "2"], ["count", "--m", "2", "--p", "2", "--nope"],
                                  ["count", "--m", "1", "--p", "3"], ["count", "--m", "6", "--p", "6"],
                                  ["dd-run", "--n", "4", "--m", "3"], ["dd-run", "--n", "4", "--m", "2", "--target", "x"],
                                  ["xi", "--m", "2", "--p", "2", "--sigma", "4,1,2,3"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_size_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("HPRIMES_SIZE_BOUND", "4")
    assert run(capsys, "count", "--m", "2", "--p", "3")[0] == 2
    assert run(capsys, "count", "--m", "2", "--p", "3", "--size-bound", "5")[0] == 0


def test_hasse_outputs(capsys, tmp_path):
    dot = tmp_path / "s.dot"
    assert run(capsys, "hasse", "--m", "2", "--p", "2", "--format", "dot", "--out", str(dot))[0] == 0
    text = dot.read_text()
    assert text.startswith("digraph S {") and text.count("->") == 27
    code, out, _ = run(capsys, "hasse", "--m", "2", "--p", "2", "--format", "json")
    assert code == 0 and len(json.loads(out)["nodes"]) == 14


def test_xi(capsys, tmp_path):
    path = tmp_path / "xi.json"
    assert run(capsys, "xi", "--m", "2", "--p", "2", "--out", str(path))[0] == 0
    assert len(json.loads(path.read_text())["entries"]) == 14
    code, out, _ = run(capsys, "xi", "--m", "2", "--p", "2", "--sigma", "1,2,3,4")
    doc = json.loads(out)
    assert doc["entries"] == [{"sigma": [1, 2, 3, 4], "wMinus": [4, 3, 2, 1], "rank": 2, "generators": []}]


def test_verifications(capsys):
    for argv in (["verify-relations", "--n", "3"], ["verify-delta-central", "--n", "2"],
                 ["verify-catalog", "--m", "2", "--p", "3"]):
        code, out, _ = run(capsys, *argv)
        assert code == 0 and json.loads(out)["ok"] is True


def test_dd_run(capsys, tmp_path):
    trace = tmp_path / "trace.json"
    code, out, _ = run(capsys, "dd-run", "--n", "4", "--m", "2", "--seed", "11", "--trace", str(trace))
    assert code == 0
    rec = json.loads(out)
    assert rec["seed"] == 11 and rec["target"] == [2, 2]
    assert rec["agree"] and rec["roundTrip"]
    assert rec["determinant"] == rec["diagonalProduct"]
    steps = json.loads(trace.read_text())
    assert steps[0]["step"] == [4, 5] and steps[-1]["step"] == [2, 2]
    assert steps[0]["matrix"] == rec["input"]
    assert all("/" in x for row in steps[-1]["matrix"] for x in row)
    Fraction(rec["determinant"])


def test_dd_run_custom_target(capsys):
    code, out, _ = run(capsys, "dd-run", "--n", "5", "--m", "3", "--target", "2,5")
    rec = json.loads(out)
    assert code == 0 and rec["target"] == [2, 5] and "agree" not in rec and rec["roundTrip"]


def test_deterministic(capsys):
    outputs = {run(capsys, "dd-run", "--n", "5", "--m", "2", "--seed", "3")[1] for _ in range(3)}
    assert len(outputs) == 1
    outputs = {run(capsys, "xi", "--m", "3", "--p", "2")[1] for _ in range(2)}
    assert len(outputs) == 1


def test_run_config_validation():
    RunConfig(2, 2)
    with pytest.raises(ValueError):
        RunConfig(1, 2)
    with pytest.raises(ValueError):
        RunConfig(5, 6)
    with pytest.raises(ValueError):
        RunConfig(2, 2, format="yaml")


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "hprimes.cli", "count", "--m", "3", "--p", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["vesztergombi"] == "230"
