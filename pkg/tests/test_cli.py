import json
import subprocess
import sys

import pytest

from nakayama.cli import main

WORKED = "cyclic:2,4,3,3,3,4,3,2,2"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    payload = json.loads(out)
    assert payload["schema"] == "nakayama/1"
    return payload


def test_analyze(capsys):
    d = run_json(capsys, "analyze", WORKED)
    assert (d["rank"], d["defect"], d["num_relations"]) == (9, 3, 6)
    assert "gldim" in d["profile"]


def test_analyze_flags_only(capsys):
    d = run_json(capsys, "analyze", "cyclic:3,4,4", "--flags-only")
    assert d["flags"]["is_higher_auslander"] is True


def test_epsilon_components(capsys):
    d = run_json(capsys, "epsilon", WORKED)
    assert sorted(d["components"]) == ["linear:2,2,1", "linear:3,2,1"]


def test_eta_duality(capsys):
    d = run_json(capsys, "eta", WORKED)
    assert d["duality_holds"] is True


def test_tower(capsys):
    d = run_json(capsys, "tower", "cyclic:6,6,6,5,5")
    assert d["tower"] == ["cyclic:5,5,4,4", "cyclic:4,3,3", "cyclic:2,2"]


def test_reverse_default_is_defect_invariant(capsys):
    d = run_json(capsys, "reverse", "--theta", "linear:2,2,1,3,2,1")
    assert d["weights"] == [1, 0, 0, 2, 0, 0]
    assert d["reverse"]["series"] == "cyclic:2,4,3,3,3,4,3,2,2"


def test_reverse_all(capsys):
    d = run_json(capsys, "reverse", "--theta", "linear:2,2,1,3,2,1", "--weights", "1,1,0,3,0,0", "--all")
    assert d["count"] == 8


def test_generate_sweep(capsys):
    d = run_json(capsys, "generate", "--family", "2ag-sweep", "--m", "2", "--v", "1,1", "--ranks", "2..11")
    assert d["series"][0] == "cyclic:4,5,4,5"
    assert len(d["series"]) == 10


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--family", "ha3", "--ns", "2,3"], "cyclic:2,2,4,3,3,3,4,3"),
        (["--family", "ha4", "--k", "2"], "cyclic:3,4,4,3,4,4"),
        (["--family", "dar3", "--ns", "1,2"], "cyclic:3,2,2,3,2"),
        (["--family", "cto", "--base", "ha3", "--ns", "3"], "cyclic:3,3,2"),
        (["--family", "2ag", "--theta", "cyclic:2,2", "--f", "2,2"], "cyclic:4,5,4,5"),
    ],
)
def test_generate_families(capsys, argv, expected):
    assert run_json(capsys, "generate", *argv)["series"] == [expected]


def test_generate_missing_flags(capsys):
    code, _, err = run(capsys, "generate", "--family", "ha3")
    assert code == 2
    assert "--ns" in err


def test_enumerate_stream(capsys):
    code, out, err = run(capsys, "enumerate", "--rank", "2", "--max", "3", "--count")
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert [x["entries"] for x in lines] == [[2, 2], [2, 3], [3, 3]]
    assert json.loads(err)["count"] == 3


def test_verify_ok(capsys):
    d = run_json(capsys, "verify", "--theorem", "duality", "--rank", "4", "--max", "5", "--jobs", "1")
    assert d["ok"] is True and d["violations"] == []


def test_verify_replay(capsys):
    d = run_json(capsys, "verify", "--theorem", "A", "--series", WORKED)
    assert d["cases"] == 1


def test_text_format_after_subcommand(capsys):
    code, out, _ = run(capsys, "analyze", WORKED, "--format", "text")
    assert code == 0
    assert "defect: 3" in out


def test_compact(capsys):
    code, out, _ = run(capsys, "--compact", "epsilon", WORKED)
    assert code == 0 and len(out.strip().splitlines()) == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["analyze", "cyclic:3,1,2"],
        ["analyze", "cyclic:a,b"],
        ["verify", "--theorem", "Q"],
        ["generate", "--family", "2ag-sweep", "--m", "2", "--v", "1", "--ranks", "x"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_inadmissible_generated_series_exit_2(capsys):
    code, _, err = run(capsys, "generate", "--family", "2ag", "--theta", "cyclic:3,2,2", "--f", "2,1,1")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nakayama", "analyze", "cyclic:2,2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rank"] == 2
