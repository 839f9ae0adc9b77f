import json
from math import gcd

import pytest

import sqfrob as sq


def test_golden_tables_load_and_agree_with_each_other():
    t1 = sq.load_table1()
    t2 = sq.load_table2()
    assert sorted(t1) == list(range(3, 13))
    assert len(t2) == 62
    by_d = {}
    for d, a, _, _ in t2:
        by_d.setdefault(d, []).append(a)
    for d in range(3, 13):
        assert by_d.get(d, []) == t1[d], d


def test_exception_set_d5():
    rep = sq.exception_set(5)
    assert rep.scan_range == (2, 499)
    assert rep.member_values() == [2, 4, 13, 27, 32]
    golden = {(d, a): (r1, r2) for d, a, r1, r2 in sq.load_table2()}
    for rec in rep.members:
        r1, r2 = golden[(5, rec.a)]
        assert rec.oracle_value == r1 ** 2
        assert rec.bound_B_value == r2 ** 2


def test_exception_set_d3_empty():
    rep = sq.exception_set(3)
    assert rep.member_values() == []
    assert rep.to_json() == '{"d":3,"scan_range":[2,107],"members":[]}'


def test_exception_set_needs_d3():
    with pytest.raises(sq.DTooSmall):
        sq.exception_set(2)


def test_reproduce_table2_passes():
    rep = sq.reproduce_table2()
    assert rep.passed
    assert rep.checked == 62


def test_verify_bound_equality_beyond_threshold():
    rep = sq.verify_bound_equality(3, 4 * 27 - 3, 2000)
    assert rep.passed
    assert rep.checked == sum(1 for a in range(105, 2001) if gcd(a, 3) == 1)


def test_verify_theorem_bound_counts_and_passes():
    lo = 4 * 2 * 125 - 10  # strong hypothesis floor for d=5, k=2
    rep = sq.verify_theorem_bound(5, 2, 2, 1200)
    assert rep.passed
    assert rep.checked == sum(1 for a in range(lo, 1201) if gcd(a, 5) == 1)
    assert rep.extra["weak_hypothesis_checked"] >= rep.checked
    assert rep.extra["weak_hypothesis_violations"] == []


def test_verify_conjectures_targets():
    rep = sq.verify_conjectures(1, 10)
    assert rep.checked == 4  # first terms 3, 4, 8, 9
    assert rep.passed
    rep = sq.verify_conjectures(2, 100)
    assert rep.checked == 8  # 7, 9, 23, 25, 47, 49, 79, 81
    assert rep.passed
    with pytest.raises(ValueError):
        sq.verify_conjectures(3, 10)


def test_verify_conjectures_sweep():
    assert sq.verify_conjectures(1, 5000).passed
    assert sq.verify_conjectures(2, 5001).passed


def test_verify_min_power_theorem():
    rep = sq.verify_min_power_theorem(2, 80)
    assert rep.passed
    assert rep.checked > 0
    # spot check the statement at (a, d, k) = (7, 2, 1)
    assert sq.power_min_oracle(sq.ApSemigroup(7, 2, 1), 2).value == 9 <= 25


def test_parallel_runs_serialize_identically():
    assert (sq.exception_set(5, jobs=1).to_json()
            == sq.exception_set(5, jobs=3).to_json())
    assert (sq.verify_conjectures(1, 20000, jobs=1).to_json()
            == sq.verify_conjectures(1, 20000, jobs=4).to_json())


def test_jobs_env_fallback(monkeypatch):
    monkeypatch.delenv("SQFROB_JOBS", raising=False)
    assert sq.verify.resolve_jobs(None) == 1
    assert sq.verify.resolve_jobs(5) == 5
    monkeypatch.setenv("SQFROB_JOBS", "3")
    assert sq.verify.resolve_jobs(None) == 3
    assert sq.verify.resolve_jobs(2) == 2


def test_sweep_report_json_shape():
    rep = sq.verify_conjectures(1, 10)
    obj = json.loads(rep.to_json())
    assert obj == {"scope": "square-frobenius conjecture, d=1", "range": [2, 10],
                   "checked": 4, "passed": True, "mismatches": []}
    assert "wall_time" not in obj
    assert rep.wall_time >= 0.0
