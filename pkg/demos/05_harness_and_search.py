"""The harness: ring description documents, the check registry, the bundled
corpus, and the seeded counterexample search.

Run as: python demos/05_harness_and_search.py
"""

import json

from gradednil import parse_ring_spec, run_checks, counterexample_search
from gradednil.cli import emit_report
from gradednil.corpus import corpus_document

print("== a ring description document ==")
document = json.dumps({
    "name": "demo-split-ring",
    "m": 3,
    "ring": {
        "kind": "triangular",
        "base": {"kind": "gf", "p": 3,
                 "grading": {"group": {"kind": "cyclic", "n": 2}, "trivial": True}},
        "n": 2,
        "sigma": [0, 1],
    },
    "checks": ["graded_m_nil_clean", "jg_graded_nil", "quotient_equivalence"],
    "expected": {"graded_m_nil_clean": True},
    "ideal": {"zero_diagonal": True},
}, indent=2)
print(document)

parsed = parse_ring_spec(document)
reports = run_checks(parsed)
print(emit_report([(parsed.name, reports)]))

print("== one bundled corpus entry, machine format ==")
parsed = parse_ring_spec(corpus_document("group-ring-z4-c2"))
reports = run_checks(parsed, checks=["graded_m_nil_clean", "augmentation_nilpotent",
                                     "group_ring_clean_transfer"])
print(emit_report([(parsed.name, reports)], fmt="machine"))

print("== counterexample search ==")
report = counterexample_search("re_mnc_implies_graded_mnc", budget=300, seed=7)
print(report.summary())
for c in report.counterexamples:
    print("  ", c)

report = counterexample_search("triangular_equivalence", budget=200, seed=7)
print(report.summary())
