import json
import subprocess
import sys

import pytest

from gradednil.checks import CHECK_REGISTRY, exit_code, run_checks
from gradednil.cli import emit_report, main
from gradednil.corpus import corpus_document, corpus_documents, corpus_names
from gradednil.errors import SpecError
from gradednil.search import (
    EXPECTED_COUNTEREXAMPLE_TARGETS,
    FORWARD_TARGETS,
    TARGETS,
    counterexample_search,
)
from gradednil.specfile import emit_ring_spec, parse_ring_spec


def doc(obj) -> str:
    return json.dumps(obj)


# ---------------------------------------------------------------------------
# parsing


def test_parse_zn_trivial():
    parsed = parse_ring_spec(doc({"m": 2, "ring": {"kind": "zn", "n": 4}}))
    assert parsed.grading.ring.size == 4
    assert sorted(parsed.grading.support) == [0]


def test_parse_triangular_split_ring():
    parsed = parse_ring_spec(doc({
        "m": 3,
        "ring": {
            "kind": "triangular",
            "base": {"kind": "gf", "p": 3,
                     "grading": {"group": {"kind": "cyclic", "n": 2}, "trivial": True}},
            "n": 2,
            "sigma": [0, 1],
        },
    }))
    assert parsed.grading.ring.size == 27
    assert sorted(len(parsed.grading.components[g]) for g in parsed.grading.support) == [3, 9]


def test_parse_matrix_swap_grading():
    parsed = parse_ring_spec(doc({
        "m": 3,
        "ring": {
            "kind": "matrix",
            "base": {"kind": "zn", "n": 3,
                     "grading": {"group": {"kind": "cyclic", "n": 2}, "trivial": True}},
            "n": 2,
            "sigma": [0, 1],
        },
    }))
    ring = parsed.grading.ring
    diag = {ring.encode_entries({(0, 0): a, (1, 1): d}) for a in range(3) for d in range(3)}
    assert parsed.grading.components[0] == frozenset(diag)


def test_parse_explicit_components():
    parsed = parse_ring_spec(doc({
        "m": 2,
        "ring": {"kind": "zn", "n": 4,
                 "grading": {"group": {"kind": "cyclic", "n": 2},
                             "components": {"0": [0, 1, 2, 3]}}},
    }))
    assert sorted(parsed.grading.support) == [0]


@pytest.mark.parametrize("bad,fragment", [
    ({"m": 2}, "missing keys"),
    ({"m": 2, "ring": {"kind": "nope"}}, "unknown ring kind"),
    ({"m": 2, "ring": {"kind": "zn", "n": 4, "extra": 1}}, "unknown keys"),
    ({"m": 1, "ring": {"kind": "zn", "n": 4}}, "must be >= 2"),
    ({"m": 2, "ring": {"kind": "zn", "n": 4}, "checks": ["nope"]}, "unknown checks"),
    ({"m": 2, "ring": {"kind": "gf", "p": 6}}, "not prime"),
    ({"m": 2, "ring": {"kind": "zn", "n": 4,
                       "grading": {"group": {"kind": "cyclic", "n": 2},
                                   "components": {"0": [0, 2], "1": [2]}}}},
     "grading validation failed"),
])
def test_parse_errors_carry_context(bad, fragment):
    with pytest.raises(SpecError) as err:
        parse_ring_spec(doc(bad))
    assert fragment in str(err.value)


def test_parse_error_is_json_position_aware():
    with pytest.raises(SpecError) as err:
        parse_ring_spec("{\n  'bad': }")
    assert "line" in str(err.value)


def test_ideal_parsing_and_closure():
    parsed = parse_ring_spec(doc({
        "m": 2, "ring": {"kind": "zn", "n": 4}, "ideal": {"generators": [2]},
    }))
    assert parsed.ideal.elements == frozenset({0, 2})
    parsed = parse_ring_spec(doc({
        "m": 2,
        "ring": {
            "kind": "triangular",
            "base": {"kind": "zn", "n": 2,
                     "grading": {"group": {"kind": "cyclic", "n": 2}, "trivial": True}},
            "n": 2, "sigma": [0, 1],
        },
        "ideal": {"zero_diagonal": True},
    }))
    assert len(parsed.ideal) == 2


# ---------------------------------------------------------------------------
# round trips


@pytest.mark.parametrize("name", corpus_names())
def test_corpus_round_trip(name):
    first = parse_ring_spec(corpus_document(name))
    text = emit_ring_spec(first)
    second = parse_ring_spec(text)
    assert first.normalized == second.normalized
    assert first.grading.components == second.grading.components
    assert first.grading.support == second.grading.support
    r1, r2 = first.grading.ring, second.grading.ring
    assert (r1.size, r1.one) == (r2.size, r2.one)
    if r1.size <= 64:
        for a in range(r1.size):
            for b in range(r1.size):
                assert r1.add(a, b) == r2.add(a, b)
                assert r1.mul(a, b) == r2.mul(a, b)


# ---------------------------------------------------------------------------
# checks and reports


def test_run_checks_statuses():
    parsed = parse_ring_spec(doc({
        "m": 3,
        "name": "fixture",
        "ring": {
            "kind": "triangular",
            "base": {"kind": "gf", "p": 3,
                     "grading": {"group": {"kind": "cyclic", "n": 2}, "trivial": True}},
            "n": 2, "sigma": [0, 1],
        },
        "checks": ["graded_m_nil_clean"],
        "expected": {"graded_m_nil_clean": True},
    }))
    (report,) = run_checks(parsed)
    assert report.status == "pass"
    assert exit_code([report]) == 0


def test_expected_negative_reports_fail_status():
    parsed = parse_ring_spec(doc({
        "m": 2,
        "ring": {"kind": "gf", "p": 3},
        "checks": ["graded_m_nil_clean"],
        "expected": {"graded_m_nil_clean": False},
    }))
    (report,) = run_checks(parsed)
    assert report.status == "fail"
    assert exit_code([report]) == 0  # matched prediction: not an error


def test_wrong_expectation_is_falsified():
    parsed = parse_ring_spec(doc({
        "m": 2,
        "ring": {"kind": "gf", "p": 3},
        "checks": ["graded_m_nil_clean"],
        "expected": {"graded_m_nil_clean": True},
    }))
    (report,) = run_checks(parsed)
    assert report.status == "falsified"
    assert report.witness is not None
    assert exit_code([report]) == 1


def test_group_ring_transfer_claim_is_falsified_on_z4_c2():
    """The p-nilpotent transfer hypotheses hold for the C2 group ring over
    Z4 at m = 2, yet the monomial at the non-identity position admits no
    homogeneous decomposition: the run must say 'falsified' with it."""
    parsed = parse_ring_spec(corpus_document("group-ring-z4-c2"))
    reports = {r.name: r for r in run_checks(parsed)}
    transfer = reports["group_ring_clean_transfer"]
    assert transfer.status == "falsified"
    assert "1*g1" in transfer.witness
    assert reports["augmentation_nilpotent"].status == "pass"
    # the plain counterpart: decision is negative although hypotheses hold
    decision = reports["graded_m_nil_clean"]
    assert decision.status == "falsified"


def test_every_registered_check_runs_somewhere_in_the_corpus():
    executed = set()
    for name, text in corpus_documents():
        parsed = parse_ring_spec(text)
        executed.update(parsed.checks)
    assert executed == set(CHECK_REGISTRY)


def test_corpus_contains_the_required_instances():
    names = set(corpus_names())
    assert {"t2-gf3-c2", "t2-gf4-c2", "m2-z3-swap", "t2-z2-c2", "diag-m2-z4",
            "t2-z4-c2", "t3-z2-c2", "group-ring-z4-c2", "amalg-z4-j2",
            "product-t2gf3-gf3", "quotient-t2z4-strict"} <= names


def test_falsified_machine_record_carries_the_witness():
    parsed = parse_ring_spec(corpus_document("group-ring-z4-c2"))
    reports = run_checks(parsed, checks=["group_ring_clean_transfer"])
    payload = json.loads(emit_report([(parsed.name, reports)], fmt="machine"))
    (record,) = payload["records"]
    assert record["status"] == "falsified"
    assert record["witness"] and "1*g1" in record["witness"]
    assert record["detail"]
    assert payload["summary"]["falsified"] == 1


def test_emit_report_formats():
    parsed = parse_ring_spec(doc({
        "m": 2, "ring": {"kind": "zn", "n": 4}, "checks": ["graded_m_nil_clean"],
        "expected": {"graded_m_nil_clean": True},
    }))
    reports = run_checks(parsed)
    text = emit_report([("z4", reports)], fmt="text")
    assert "graded_m_nil_clean" in text and "summary:" in text
    machine = json.loads(emit_report([("z4", reports)], fmt="machine"))
    assert machine["records"][0]["entry"] == "z4"
    assert machine["records"][0]["status"] == "pass"
    assert machine["summary"]["pass"] == 1
    empty = emit_report([], fmt="text")
    assert "summary:" in empty


# ---------------------------------------------------------------------------
# counterexample search


def test_search_unknown_target():
    with pytest.raises(KeyError):
        counterexample_search("nope", budget=1)


def test_search_empty_budget():
    report = counterexample_search("re_mnc_implies_graded_mnc", budget=0)
    assert report.tested == 0 and not report.found and report.vacuous


def test_search_finds_the_identity_component_counterexample():
    report = counterexample_search("re_mnc_implies_graded_mnc", budget=400, seed=7)
    assert report.found
    assert report.hypothesis_hits > 0
    # the group-ring family is where the finite counterexamples live
    assert any("group_ring" in c for c in report.counterexamples)


def test_search_finds_group_ring_transfer_counterexample():
    report = counterexample_search("group_ring_transfer_p_nilpotent", budget=400, seed=7)
    assert report.found


def test_search_reports_are_deterministic():
    a = counterexample_search("triangular_equivalence", budget=150, seed=3)
    b = counterexample_search("triangular_equivalence", budget=150, seed=3)
    assert a.to_dict()["counterexamples"] == b.to_dict()["counterexamples"]
    assert a.tested == b.tested and a.hypothesis_hits == b.hypothesis_hits


def test_forward_targets_clean_on_modest_budget():
    for target in FORWARD_TARGETS:
        report = counterexample_search(target, budget=120, seed=11)
        assert not report.found, f"{target}: {report.counterexamples}"


def test_target_partition():
    assert set(EXPECTED_COUNTEREXAMPLE_TARGETS) <= set(TARGETS)
    assert not set(EXPECTED_COUNTEREXAMPLE_TARGETS) & set(FORWARD_TARGETS)


# ---------------------------------------------------------------------------
# CLI


def test_cli_check_and_exit_codes(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(doc({
        "m": 2, "ring": {"kind": "zn", "n": 4},
        "checks": ["graded_m_nil_clean"], "expected": {"graded_m_nil_clean": True},
    }))
    assert main(["check", str(good)]) == 0

    bad = tmp_path / "bad.json"
    bad.write_text(doc({"m": 2, "ring": {"kind": "nope"}}))
    assert main(["check", str(bad)]) == 2

    falsify = tmp_path / "falsify.json"
    falsify.write_text(doc({
        "m": 2, "ring": {"kind": "gf", "p": 3},
        "checks": ["graded_m_nil_clean"], "expected": {"graded_m_nil_clean": True},
    }))
    assert main(["check", str(falsify)]) == 1


def test_cli_check_emit_spec(tmp_path, capsys):
    spec = tmp_path / "z4.json"
    spec.write_text(doc({
        "m": 2, "ring": {"kind": "zn", "n": 4},
        "checks": ["graded_m_nil_clean"], "expected": {"graded_m_nil_clean": True},
    }))
    assert main(["check", str(spec), "--emit-spec"]) == 0
    out = capsys.readouterr().out
    canonical = out[out.index("{"):]
    reparsed = parse_ring_spec(canonical)
    assert reparsed.grading.ring.size == 4


def test_cli_radical(tmp_path, capsys):
    spec = tmp_path / "z4.json"
    spec.write_text(doc({"m": 2, "ring": {"kind": "zn", "n": 4}}))
    assert main(["radical", str(spec)]) == 0
    out = capsys.readouterr().out
    assert "2 element(s)" in out
    assert main(["radical", str(spec), "--graded"]) == 0


def test_cli_search(capsys):
    assert main(["search", "--list-targets"]) == 0
    out = capsys.readouterr().out
    assert "re_mnc_implies_graded_mnc" in out
    assert main(["search", "--target", "diagonal_z_equivalence",
                 "--budget", "50", "--seed", "1", "--format", "machine"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["found"] is False


def test_cli_corpus_single_entry(capsys):
    assert main(["corpus", "--only", "z4-trivial"]) == 0
    out = capsys.readouterr().out
    assert "entry z4-trivial" in out


def test_cli_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "gradednil.cli", "search", "--list-targets"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "triangular_equivalence" in proc.stdout
