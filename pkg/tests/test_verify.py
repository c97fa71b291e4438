"""Tests for the check registry and runner plumbing.

Includes a mutation probe: corrupting a formula that one side of a check
depends on must flip that check to "fail" with a witness naming the first
rank where the two sides disagree.  This guards against checks that compare
a quantity with itself.
"""

import json

import pytest

import qcharsum.chars as chars
import qcharsum.verify as verify
from qcharsum.verify import (
    REGISTRY,
    CheckSpec,
    SkipCheck,
    reports_to_json,
    reports_to_tsv,
    run_all,
    run_check,
    summary_lines,
)


FROZEN_IDS = [
    "weyl-A",
    "weyl-B",
    "weyl-D",
    "lemma-prodlem-1",
    "lemma-prodlem-2",
    "thm-genfnGL",
    "thm-even",
    "thm-odd",
    "cor-iden",
    "cor-cort",
    "remark-igl-table",
    "u-prodlems",
    "thm-degreesU",
    "thm-warid",
    "cor-warcor",
    "prop-involU-even",
    "prop-involU-odd",
    "cor-epsplit-even",
    "cor-epsplit-odd",
    "thm-unsumeven",
    "cor-unsumeven-pm",
    "cor-genfn-even-alt",
    "thm-unsumodd",
    "example-u2-even",
    "example-u3-even",
    "example-u2-odd",
    "oracle-brute-involutions",
    "oracle-real-sums",
    "oracle-poly-census",
    "oracle-hl-finite",
]


def test_registry_is_frozen():
    assert list(REGISTRY) == FROZEN_IDS


def test_registry_specs_well_formed():
    for cid, spec in REGISTRY.items():
        assert spec.id == cid
        assert spec.description
        assert isinstance(spec.tags, tuple)
        # quick-budget values may only shrink declared parameters
        assert set(spec.quick) <= set(spec.params), cid
        assert callable(spec.fn)


def test_unknown_id_raises():
    with pytest.raises(KeyError):
        run_check("thm-nonexistent")
    with pytest.raises(KeyError):
        run_all(ids=["weyl-A", "bogus"])


def test_unknown_override_raises():
    with pytest.raises(ValueError):
        run_check("weyl-A", bogus_knob=3)


def test_small_check_passes():
    r = run_check("weyl-A", nmax=5)
    assert r.status == "pass"
    assert r.witness is None
    assert r.params == {"nmax": 5}
    assert r.millis >= 0


def test_trivial_order_passes():
    # an empty comparison window cannot fail
    r = run_check("cor-iden", order=0)
    assert r.status == "pass"


def test_run_all_id_and_tag_filters():
    reports = run_all(ids=["weyl-A", "weyl-B"])
    assert [r.id for r in reports] == ["weyl-A", "weyl-B"]
    reports = run_all(tag="weyl", overrides={"nmax": 4})
    assert [r.id for r in reports] == ["weyl-A", "weyl-B", "weyl-D"]
    assert all(r.params == {"nmax": 4} for r in reports)


def test_overrides_apply_only_where_declared():
    reports = run_all(ids=["weyl-A", "example-u2-even"], overrides={"nmax": 3})
    by_id = {r.id: r for r in reports}
    assert by_id["weyl-A"].params == {"nmax": 3}
    assert by_id["example-u2-even"].params == {}
    assert all(r.status == "pass" for r in reports)


def test_quick_budget_from_environment(monkeypatch):
    monkeypatch.setenv("QCHARSUM_BUDGET", "quick")
    r = run_check("weyl-A")
    assert r.params == {"nmax": 8}
    monkeypatch.setenv("QCHARSUM_BUDGET", "bogus")
    with pytest.raises(ValueError):
        run_check("weyl-A")


def test_skip_surfaces_as_skipped(monkeypatch):
    def skipping_runner():
        raise SkipCheck("needs optional hardware")

    spec = CheckSpec(
        id="skip-probe",
        tags=("probe",),
        description="always skips",
        params={},
        quick={},
        fn=skipping_runner,
    )
    monkeypatch.setitem(REGISTRY, "skip-probe", spec)
    r = run_check("skip-probe")
    assert r.status == "skipped"
    assert "hardware" in r.witness


def test_crash_surfaces_as_failure():
    # a non-integer bound reaches range() inside the runner and raises;
    # the runner must convert that to a failed report, not an exception
    r = run_check("weyl-A", nmax="six")
    assert r.status == "fail"
    assert r.witness.startswith("error:")


def test_mutation_is_detected(monkeypatch):
    # Corrupt the rank-3 group order.  The closed-form involution count uses
    # it; the generating-function side does not.  The comparison must now
    # fail exactly at n=3.
    real = chars.gl_group_order

    def corrupted(n, q=None):
        value = real(n, q)
        return value + 1 if n == 3 else value

    monkeypatch.setattr(chars, "gl_group_order", corrupted)
    r = run_check("thm-even", nmax=4)
    assert r.status == "fail"
    assert "n=3" in r.witness
    r = run_check("thm-odd", nmax=4)
    assert r.status == "fail"
    assert "n=3" in r.witness


def test_mutation_in_u_order_is_detected(monkeypatch):
    real = chars.u_group_order

    def corrupted(n, q=None):
        value = real(n, q)
        return value + 1 if n == 2 else value

    monkeypatch.setattr(chars, "u_group_order", corrupted)
    r = run_check("prop-involU-even", nmax=3)
    assert r.status == "fail"
    assert "n=2" in r.witness


def test_json_report_shape():
    reports = run_all(ids=["weyl-A"], overrides={"nmax": 4})
    rows = json.loads(reports_to_json(reports))
    assert rows == [
        {
            "id": "weyl-A",
            "millis": rows[0]["millis"],
            "params": {"nmax": 4},
            "status": "pass",
        }
    ]


def test_json_deterministic_modulo_timing():
    a = json.loads(reports_to_json(run_all(ids=["weyl-B"], overrides={"nmax": 5})))
    b = json.loads(reports_to_json(run_all(ids=["weyl-B"], overrides={"nmax": 5})))
    for row in a + b:
        row.pop("millis")
    assert a == b


def test_tsv_report_shape():
    reports = run_all(tag="weyl", overrides={"nmax": 3})
    text = reports_to_tsv(reports)
    lines = text.rstrip("\n").split("\n")
    assert lines[0] == "id\tstatus\tmillis\twitness"
    assert len(lines) == 4
    for line in lines[1:]:
        fields = line.split("\t")
        assert len(fields) == 4
        assert fields[1] == "pass"


def test_summary_lines_format():
    reports = run_all(ids=["weyl-A"], overrides={"nmax": 4})
    lines = list(summary_lines(reports))
    assert len(lines) == 1
    assert lines[0].startswith("[PASS] weyl-A (")


def test_igl_observation_note_is_attached():
    # The coefficient-pattern scan reports what it saw beyond the verified
    # table as a note on a passing check.
    r = run_check("remark-igl-table", nmax=4, observe_nmax=8)
    assert r.status == "pass"
    assert r.witness is not None and "rank 8" in r.witness
