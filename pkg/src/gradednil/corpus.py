"""The bundled corpus: one ring description document per structural story.

Every entry is a spec-file text, so the corpus also exercises the parser.
``expected`` blocks encode the predicted decisions; where a transfer claim
is known to break, the prediction is kept and the run reports ``falsified``
with a witness, which is the interesting outcome.
"""

import json

_C1 = {"kind": "cyclic", "n": 1}
_C2 = {"kind": "cyclic", "n": 2}


def _ring(kind, **kw):
    return {"kind": kind, **kw}


def _leaf(kind, group=_C1, **kw):
    return _ring(kind, grading={"group": group, "trivial": True}, **kw)


_CHEAP_CHECKS = [
    "graded_m_nil_clean",
    "graded_strongly_m_nil_clean",
    "identity_component_m_nil_clean",
    "nonidentity_components_nil",
    "homogeneous_m_potent_degree",
    "torsion_free_m_potents_in_identity",
    "triangular_equivalence",
]


_ENTRIES = [
    # upper-triangular 2x2 over GF(3), C2-graded diagonal/strict-upper
    {
        "name": "t2-gf3-c2",
        "m": 3,
        "ring": _ring("triangular", base=_leaf("gf", group=_C2, p=3), n=2, sigma=[0, 1]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
            "graded_local": False,
        },
        "ideal": {"zero_diagonal": True},
    },
    # the same ring fails for m = 2 (expected-negative fixture)
    {
        "name": "t2-gf3-c2-m2",
        "m": 2,
        "ring": _ring("triangular", base=_leaf("gf", group=_C2, p=3), n=2, sigma=[0, 1]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": False,
            "graded_strongly_m_nil_clean": False,
        },
        "ideal": {"zero_diagonal": True},
    },
    {
        "name": "t2-gf4-c2",
        "m": 4,
        "ring": _ring("triangular", base=_leaf("gf", group=_C2, p=2, k=2), n=2, sigma=[0, 1]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
        "ideal": {"zero_diagonal": True},
    },
    # M_2(Z_3) with the diagonal/antidiagonal C2-grading
    {
        "name": "m2-z3-swap",
        "m": 3,
        "ring": _ring("matrix", base=_leaf("zn", group=_C2, n=3), n=2, sigma=[0, 1]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": False,
        },
    },
    # upper-triangular 2x2 over Z_2: strongly clean without pi-regularity
    {
        "name": "t2-z2-c2",
        "m": 2,
        "ring": _ring("triangular", base=_leaf("zn", group=_C2, n=2), n=2, sigma=[0, 1]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
            "strongly_clean_without_pi_regular": True,
            "graded_local": False,
        },
        "ideal": {"zero_diagonal": True},
    },
    {
        "name": "t2-z4-c2",
        "m": 2,
        "ring": _ring("triangular", base=_leaf("zn", group=_C2, n=4), n=2, sigma=[0, 1]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
        "ideal": {"zero_diagonal": True},
    },
    {
        "name": "t3-z2-c2",
        "m": 2,
        "ring": _ring("triangular", base=_leaf("zn", group=_C2, n=2), n=3, sigma=[0, 1, 0]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
        "ideal": {"zero_diagonal": True},
    },
    # 4096 elements: decisions only, the ideal lattice is out of budget here
    {
        "name": "t3-z4-c2",
        "m": 2,
        "ring": _ring("triangular", base=_leaf("zn", group=_C2, n=4), n=3, sigma=[0, 1, 0]),
        "checks": _CHEAP_CHECKS,
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
    },
    # diagonal integer grading of M_2
    {
        "name": "diag-m2-z4",
        "m": 2,
        "ring": _ring("diagonal_z", base=_ring("zn", n=4), n=2),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
    },
    {
        "name": "diag-m2-gf3",
        "m": 2,
        "ring": _ring("diagonal_z", base=_ring("gf", p=3), n=2),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": False,
            "graded_strongly_m_nil_clean": False,
        },
    },
    # plain rings
    {
        "name": "z4-trivial",
        "m": 2,
        "ring": _leaf("zn", n=4),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
            "graded_local": True,
        },
        "ideal": {"generators": [2]},
    },
    {
        "name": "z9-trivial",
        "m": 3,
        "ring": _leaf("zn", n=9),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
            "graded_local": True,
        },
        "ideal": {"generators": [3]},
    },
    {
        "name": "gf4-trivial",
        "m": 4,
        "ring": _leaf("gf", p=2, k=2),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
            "graded_local": True,
        },
    },
    {
        "name": "gf3-trivial-m2",
        "m": 2,
        "ring": _leaf("gf", p=3),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": False,
            "graded_strongly_m_nil_clean": False,
            "graded_local": True,
        },
    },
    {
        "name": "zero-ring",
        "m": 2,
        "ring": _leaf("zn", n=1),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
    },
    # group rings over C2; the transfer claim breaks on the Z_4 and Z_2 bases
    {
        "name": "group-ring-z4-c2",
        "m": 2,
        "ring": _ring("group_ring", base=_leaf("zn", group=_C2, n=4), group=_C2, mode="auto"),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,  # predicted by the transfer claim; falsified by the run
            "augmentation_nilpotent": True,
        },
    },
    {
        "name": "group-ring-z2-c2",
        "m": 2,
        "ring": _ring("group_ring", base=_leaf("zn", group=_C2, n=2), group=_C2, mode="auto"),
        "checks": ["all"],
        "expected": {
            "augmentation_nilpotent": True,
        },
    },
    {
        "name": "group-ring-z3-c2",
        "m": 3,
        "ring": _ring("group_ring", base=_leaf("zn", group=_C2, n=3), group=_C2, mode="auto"),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
            "augmentation_nilpotent": False,
        },
    },
    # amalgamations (sharing the trivial grading over the one-element group)
    {
        "name": "amalg-z4-j2",
        "m": 2,
        "ring": _ring("amalgamation", a=_leaf("zn", n=4), b=_leaf("zn", n=4),
                      f="identity", ideal={"generators": [2]}),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
    },
    {
        "name": "amalg-z4-full",
        "m": 2,
        "ring": _ring("amalgamation", a=_leaf("zn", n=4), b=_leaf("zn", n=4),
                      f="identity", ideal={"all": True}),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
    },
    {
        "name": "amalg-gf3-full",
        "m": 2,
        "ring": _ring("amalgamation", a=_leaf("gf", p=3), b=_leaf("gf", p=3),
                      f="identity", ideal={"all": True}),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": False,
            "graded_strongly_m_nil_clean": False,
        },
    },
    # products of earlier entries
    {
        "name": "product-t2gf3-gf3",
        "m": 3,
        "ring": _ring("product", factors=[
            _ring("triangular", base=_leaf("gf", group=_C2, p=3), n=2, sigma=[0, 1]),
            _leaf("gf", group=_C2, p=3),
        ]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
    },
    {
        "name": "product-t2gf3-gf3-m2",
        "m": 2,
        "ring": _ring("product", factors=[
            _ring("triangular", base=_leaf("gf", group=_C2, p=3), n=2, sigma=[0, 1]),
            _leaf("gf", group=_C2, p=3),
        ]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": False,
            "graded_strongly_m_nil_clean": False,
        },
    },
    # quotients of earlier entries
    {
        "name": "quotient-t2z4-strict",
        "m": 2,
        "ring": _ring("quotient",
                      base=_ring("triangular", base=_leaf("zn", group=_C2, n=4),
                                 n=2, sigma=[0, 1]),
                      ideal={"zero_diagonal": True}),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
        },
    },
    {
        "name": "quotient-z4-by-2",
        "m": 2,
        "ring": _ring("quotient", base=_leaf("zn", n=4), ideal={"generators": [2]}),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": True,
            "graded_local": True,
        },
    },
    # matrix ring over the identity sigma (trivially graded M_2(Z_4))
    {
        "name": "m2-z4-sigma-ee",
        "m": 2,
        "ring": _ring("matrix", base=_leaf("zn", group=_C2, n=4), n=2, sigma=[0, 0]),
        "checks": ["all"],
        "expected": {
            "graded_m_nil_clean": True,
            "graded_strongly_m_nil_clean": False,
        },
    },
]


def corpus_documents() -> list[tuple[str, str]]:
    """(name, document text) for every bundled entry."""
    return [(e["name"], json.dumps(e, indent=2)) for e in _ENTRIES]


def corpus_names() -> list[str]:
    return [e["name"] for e in _ENTRIES]


def corpus_document(name: str) -> str:
    for e in _ENTRIES:
        if e["name"] == name:
            return json.dumps(e, indent=2)
    raise KeyError(name)
