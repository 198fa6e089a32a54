"""The named check suite: registry shape, selection, result payloads."""

import pytest

from hgslab.verify import CHECKS, CheckResult, check_ids, run_checks


def test_check_ids_are_unique_and_kebab_case():
    ids = check_ids()
    assert len(ids) == len(set(ids))
    for cid in ids:
        assert cid == cid.lower()
        assert " " not in cid


def test_registry_rows_have_descriptions():
    for cid, desc, fn in CHECKS:
        assert desc and callable(fn)


def test_run_checks_selection():
    results = run_checks(only=["dihedral-family"])
    assert len(results) == 1
    assert results[0].check_id == "dihedral-family"
    assert results[0].passed
    assert results[0].detail


def test_run_checks_rejects_unknown_id():
    with pytest.raises(ValueError):
        run_checks(only=["nope"])


def test_result_json_timing_flag():
    r = CheckResult("x", "desc", True, "ok", 1.234)
    assert "seconds" not in r.to_json()
    assert r.to_json(timing=True)["seconds"] == 1.234


def test_fast_checks_pass():
    results = run_checks(only=[
        "metacyclic-cyclic-family",
        "dihedral-family",
        "metacyclic-sibling-family",
        "brace-comparison-census",
    ])
    assert all(r.passed for r in results), \
        [(r.check_id, r.detail) for r in results if not r.passed]
