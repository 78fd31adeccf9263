import pytest

from gradednil.constructions import (
    diagonal_z_grading,
    group_ring_graded,
    matrix_graded,
    triangular_graded,
)
from gradednil.errors import ValidationError
from gradednil.grading import trivial_grading
from gradednil.groups import make_cyclic
from gradednil.nilclean import (
    graded_commuting_equivalence_check,
    graded_m_nil_clean_witness,
    graded_pi_regular_witness,
    is_graded_m_nil_clean_ring,
    is_m_nil_clean_ring,
    lift_m_potent,
    m_nil_clean_witness,
    pi_regular_witness,
    prop_commuting_equivalence_check,
    strongly_pi_regular_certificates,
    strongly_pi_regular_from_m_nil_clean,
    strongly_pi_regular_uniqueness_check,
)
from gradednil.rings import make_gf, make_zn

C2 = make_cyclic(2)


# ---------------------------------------------------------------------------
# brute-force oracle for plain m-nil cleanness


def brute_is_m_nil_clean(ring, x, m, strong=False):
    for f in ring.elements():
        acc = ring.one
        for _ in range(m):
            acc = ring.mul(acc, f)
        if acc != f:
            continue
        n = ring.sub(x, f)
        p = n
        nilpotent = False
        for _ in range(ring.size + 1):
            if p == 0:
                nilpotent = True
                break
            p = ring.mul(p, n)
        if not nilpotent:
            continue
        if strong and ring.mul(f, n) != ring.mul(n, f):
            continue
        return True
    return False


@pytest.mark.parametrize("ring", [make_zn(4), make_zn(6), make_gf(2, 2), make_zn(9)],
                         ids=lambda r: r.label)
@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("strong", [False, True])
def test_witness_search_matches_brute_force(ring, m, strong):
    for x in ring.elements():
        got = m_nil_clean_witness(ring, x, m, strong) is not None
        assert got == brute_is_m_nil_clean(ring, x, m, strong)


def test_witness_examples():
    z4 = make_zn(4)
    cert = m_nil_clean_witness(z4, 0, 2)
    assert (cert.f, cert.n) == (0, 0)
    cert = m_nil_clean_witness(z4, 3, 2)
    assert (cert.f, cert.n) == (1, 2)
    gf3 = make_gf(3)
    cert = m_nil_clean_witness(gf3, 2, 3)
    assert (cert.f, cert.n) == (2, 0)


def test_ring_level_decisions():
    assert is_m_nil_clean_ring(make_gf(3), 3)
    assert not is_m_nil_clean_ring(make_gf(3), 2)
    assert is_m_nil_clean_ring(make_zn(4), 2)
    assert is_m_nil_clean_ring(make_zn(1), 2)
    assert is_m_nil_clean_ring(make_zn(2), 2)


# ---------------------------------------------------------------------------
# graded witnesses


@pytest.fixture(scope="module")
def split_gf3():
    return triangular_graded(trivial_grading(make_gf(3), C2), 2, [0, 1])[0]


@pytest.fixture(scope="module")
def split_z2():
    return triangular_graded(trivial_grading(make_zn(2), C2), 2, [0, 1])[0]


def test_graded_witness_strictly_upper(split_z2):
    ring = split_z2.ring
    e12 = ring.encode_entries({(0, 1): 1})
    cert = graded_m_nil_clean_witness(split_z2, e12, 2, strong=True)
    assert cert is not None and cert.f == 0 and cert.n == e12 and cert.commuting
    assert cert.degree == 1


def test_graded_witness_scalar_cases(split_gf3):
    ring = split_gf3.ring
    scalar2 = ring.encode_entries({(0, 0): 2, (1, 1): 2})
    assert graded_m_nil_clean_witness(split_gf3, scalar2, 2) is None
    cert = graded_m_nil_clean_witness(split_gf3, scalar2, 3)
    assert cert is not None and cert.f == scalar2 and cert.n == 0


def test_graded_witness_rejects_non_homogeneous(split_gf3):
    ring = split_gf3.ring
    mixed = ring.add(ring.one, ring.encode_entries({(0, 1): 1}))
    with pytest.raises(ValidationError):
        graded_m_nil_clean_witness(split_gf3, mixed, 3)


def test_graded_ring_decisions(split_gf3):
    ok3, _ = is_graded_m_nil_clean_ring(split_gf3, 3)
    assert ok3
    ok2, witness = is_graded_m_nil_clean_ring(split_gf3, 2)
    assert not ok2
    # the failing element sits in the diagonal component with an entry
    # outside {0, 1}
    assert split_gf3.degree_of(witness) == 0
    entries = split_gf3.ring.decode(witness)
    assert any(v not in (0, 1) for v in entries.values())


def test_zero_ring_is_graded_clean():
    zero = trivial_grading(make_zn(1))
    ok, w = is_graded_m_nil_clean_ring(zero, 2)
    assert ok and w is None


def test_witness_determinism(split_gf3):
    a = [graded_m_nil_clean_witness(split_gf3, x, 3) for x, _ in split_gf3.homogeneous_elements()]
    b = [graded_m_nil_clean_witness(split_gf3, x, 3) for x, _ in split_gf3.homogeneous_elements()]
    assert [(c.f, c.n) for c in a] == [(c.f, c.n) for c in b]


# ---------------------------------------------------------------------------
# pi-regular decompositions


def test_pi_regular_witness_examples():
    z2 = make_zn(2)
    cert = pi_regular_witness(z2, 0)
    assert (cert.f, cert.u) == (1, 1)  # u = -1 in Z2
    z4 = make_zn(4)
    cert = pi_regular_witness(z4, 1)
    assert (cert.f, cert.u) == (0, 1)


def test_graded_pi_regular_none_for_strictly_upper(split_z2):
    ring = split_z2.ring
    e12 = ring.encode_entries({(0, 1): 1})
    assert graded_pi_regular_witness(split_z2, e12) is None
    one_cert = graded_pi_regular_witness(split_z2, ring.one)
    assert one_cert is not None and one_cert.f == 0


def test_strongly_pi_regular_construction_examples():
    gf3 = make_gf(3)
    cert = strongly_pi_regular_from_m_nil_clean(gf3, 2, 0, 3)
    assert (cert.f, cert.u) == (0, 2)
    z4 = make_zn(4)
    cert = strongly_pi_regular_from_m_nil_clean(z4, 1, 2, 2)
    assert (cert.f, cert.u) == (0, 3)
    cert = strongly_pi_regular_from_m_nil_clean(z4, 0, 0, 2)
    assert (cert.f, cert.u) == (1, 3)  # 1 - 0 and -1


def test_strongly_pi_regular_construction_rejects_bad_inputs():
    z4 = make_zn(4)
    with pytest.raises(ValidationError):
        strongly_pi_regular_from_m_nil_clean(z4, 2, 0, 2)  # 2 is not idempotent
    with pytest.raises(ValidationError):
        strongly_pi_regular_from_m_nil_clean(z4, 1, 1, 2)  # 1 is not nilpotent


@pytest.mark.parametrize("ring", [make_zn(2), make_zn(4), make_gf(3), make_zn(6)],
                         ids=lambda r: r.label)
def test_uniqueness_of_strongly_pi_regular_decompositions(ring):
    for a in ring.elements():
        assert strongly_pi_regular_uniqueness_check(ring, a)
        assert len(strongly_pi_regular_certificates(ring, a)) <= 1


def test_construction_lands_on_the_unique_decomposition():
    z4 = make_zn(4)
    for x in z4.elements():
        w = m_nil_clean_witness(z4, x, 2, strong=True)
        if w is None:
            continue
        built = strongly_pi_regular_from_m_nil_clean(z4, w.f, w.n, 2)
        certs = strongly_pi_regular_certificates(z4, x)
        assert [(built.f, built.u)] == [(c.f, c.u) for c in certs]


# ---------------------------------------------------------------------------
# lifting


def test_lift_examples():
    z9 = make_zn(9)
    assert lift_m_potent(z9, 4, {0, 3, 6}, 3) == 1
    assert lift_m_potent(z9, 1, {0, 3, 6}, 3) == 1  # already m-potent
    assert lift_m_potent(z9, 8, {0, 3, 6}, 3) == 8  # already m-potent: returned as-is
    z4 = make_zn(4)
    assert lift_m_potent(z4, 3, {0, 2}, 2) == 1


def test_lift_preconditions_rejected_by_name():
    z4 = make_zn(4)
    with pytest.raises(ValidationError, match="not a unit"):
        lift_m_potent(make_zn(9), 1, {0, 3, 6}, 4)  # 3 is not a unit mod 9
    with pytest.raises(ValidationError, match="not nil"):
        lift_m_potent(z4, 3, {0, 1, 2, 3}, 2)
    with pytest.raises(ValidationError, match="not in the ideal"):
        lift_m_potent(z4, 2, {0}, 2)


def test_lift_exhaustive_over_small_rings():
    for ring, ideal, m in [
        (make_zn(4), {0, 2}, 2),
        (make_zn(9), {0, 3, 6}, 3),
        (make_zn(8), {0, 2, 4, 6}, 2),
    ]:
        for x in ring.elements():
            if ring.sub(ring.power(x, m), x) in ideal:
                f = lift_m_potent(ring, x, ideal, m)
                assert ring.power(f, m) == f
                assert ring.sub(f, x) in ideal


# ---------------------------------------------------------------------------
# commuting equivalences


@pytest.mark.parametrize("ring", [make_zn(4), make_gf(3), make_zn(6)], ids=lambda r: r.label)
@pytest.mark.parametrize("m", [2, 3])
def test_commuting_equivalence_over_small_rings(ring, m):
    for a in ring.elements():
        w = pi_regular_witness(ring, a)
        if w is None:
            continue
        assert prop_commuting_equivalence_check(ring, a, w.f, w.u, m)


def test_commuting_equivalence_trivial_example():
    z2 = make_zn(2)
    assert prop_commuting_equivalence_check(z2, 0, 1, 1, 2)


def test_graded_commuting_equivalence_trivial_grading_matches_plain():
    grading = trivial_grading(make_zn(4))
    for a in grading.ring.elements():
        w = graded_pi_regular_witness(grading, a)
        if w is None:
            continue
        assert graded_commuting_equivalence_check(grading, a, w.f, w.u, 2)
        assert prop_commuting_equivalence_check(grading.ring, a, w.f, w.u, 2)


def test_graded_commuting_equivalence_torsion_precondition():
    grading, _ = triangular_graded(trivial_grading(make_gf(3), C2), 2, [0, 1])
    ring = grading.ring
    with pytest.raises(ValidationError, match="torsion"):
        graded_commuting_equivalence_check(grading, ring.one, 0, ring.one, 3)


def test_graded_commuting_equivalence_on_torsion_free_instances():
    # diagonal integer grading: the grading group is torsion free for every m
    grading = diagonal_z_grading(make_zn(4), 2)
    tested = 0
    for a, _deg in grading.homogeneous_elements():
        w = graded_pi_regular_witness(grading, a)
        if w is None:
            continue
        assert graded_commuting_equivalence_check(grading, a, w.f, w.u, 2)
        tested += 1
    assert tested > 0


# ---------------------------------------------------------------------------
# graded decisions for the other bundled constructions


def test_group_ring_monomial_blocks_graded_cleanness():
    grading = group_ring_graded(trivial_grading(make_zn(4), C2), C2)
    ok, witness = is_graded_m_nil_clean_ring(grading, 2)
    assert not ok
    ring = grading.ring
    assert witness == ring.encode({1: 1})  # the unit sitting at the non-identity position
    assert is_m_nil_clean_ring(ring, 2)  # yet the ungraded ring is clean


def test_group_ring_with_matching_exponent_is_clean():
    grading = group_ring_graded(trivial_grading(make_zn(3), C2), C2)
    ok, _ = is_graded_m_nil_clean_ring(grading, 3, strong=True)
    assert ok


def test_matrix_swap_strongly_fails_but_plain_holds():
    grading = matrix_graded(trivial_grading(make_zn(3), C2), 2, [0, 1])
    assert is_graded_m_nil_clean_ring(grading, 3)[0]
    ok, witness = is_graded_m_nil_clean_ring(grading, 3, strong=True)
    assert not ok and grading.degree_of(witness) == 1
