import json

import pytest

from nakayama import cyclic, verify
from nakayama.harness import SCHEMA, THEOREMS, VerificationReport, _merge, default_jobs, verify_series


@pytest.mark.parametrize("theorem", THEOREMS)
def test_small_universe_is_clean(theorem):
    report = verify(theorem, 4, 6, jobs=1)
    assert report.ok, report.violations[:3]
    assert all(c["violations"] == 0 for c in report.checks.values())


def test_case_count_matches_universe():
    from nakayama import universe

    assert verify("counts", 4, 6, jobs=1).cases == len(universe(4, 6))


@pytest.mark.parametrize("theorem", ["A", "counts"])
def test_job_count_does_not_change_output(theorem):
    one = verify(theorem, 5, 6, jobs=1).to_dict()
    many = verify(theorem, 5, 6, jobs=3).to_dict()
    one.pop("elapsed")
    many.pop("elapsed")
    assert one == many


def test_fiber_checks_run_for_A():
    checks = verify("A", 5, 6, jobs=1).checks
    assert checks["fiber_is_one_class"]["applied"] > 0
    assert checks["round_trip"]["applied"] > 0


def test_report_json_shape():
    d = verify("duality", 3, 4, jobs=1).to_dict()
    assert d["schema"] == SCHEMA
    assert d["universe"] == {"kind": "cyclic", "rank_bound": 3, "entry_bound": 4}
    assert d["ok"] is True
    json.dumps(d)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify("Z", 3, 3)
    with pytest.raises(ValueError):
        verify_series("Z", cyclic(2, 2))


def test_witness_carries_replay_command():
    report = VerificationReport("B", 6, 8)
    _merge(report, {"defect_monotone": 1}, [("cyclic:3,2,2", ("defect_monotone", ">= 1", "0"))])
    assert not report.ok
    w = report.violations[0]
    assert w["replay"] == "nakayama verify --theorem B --series cyclic:3,2,2"
    assert report.checks["defect_monotone"] == {"applied": 1, "violations": 1}


def test_replay_single_series():
    report = verify_series("A", cyclic(2, 4, 3, 3, 3, 4, 3, 2, 2))
    assert report.ok
    assert report.checks["round_trip"]["applied"] == 1
    assert report.checks["fiber_is_one_class"]["applied"] == 1


def test_default_jobs(monkeypatch):
    monkeypatch.delenv("NAKAYAMA_JOBS", raising=False)
    assert default_jobs() == 1
    monkeypatch.setenv("NAKAYAMA_JOBS", "4")
    assert default_jobs() == 4
