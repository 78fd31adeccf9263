import pytest

from gradednil.errors import ValidationError
from gradednil.rings import (
    TableRing,
    check_ring_axioms,
    classify_element,
    idempotents,
    inverse_of,
    is_m_potent,
    is_nil_set,
    is_nilpotent,
    is_unit,
    jacobson_radical,
    lowest_irreducible,
    m_potents,
    make_gf,
    make_zn,
    nilpotency_index,
    product_ring,
    quotient_ring,
    subring_from_elements,
)

# ---------------------------------------------------------------------------
# independent oracles


def brute_nilpotency_index(ring, x):
    p = x
    for k in range(1, ring.size + 2):
        if p == 0:
            return k
        p = ring.mul(p, x)
    return None


def brute_power(ring, x, m):
    acc = ring.one
    for _ in range(m):
        acc = ring.mul(acc, x)
    return acc


def brute_inverse(ring, x):
    for y in ring.elements():
        if ring.mul(x, y) == ring.one and ring.mul(y, x) == ring.one:
            return y
    return None


SMALL_RINGS = [make_zn(n) for n in (1, 2, 3, 4, 6, 8, 9)] + [make_gf(2, 2), make_gf(3, 2)]


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=lambda r: r.label)
def test_ring_axioms_exhaustively(ring):
    check_ring_axioms(ring, cap=100)


def test_zero_ring():
    z1 = make_zn(1)
    assert z1.size == 1 and z1.one == 0
    assert nilpotency_index(z1, 0) == 1
    assert is_unit(z1, 0)


def test_zn_arithmetic():
    z4 = make_zn(4)
    assert z4.mul(2, 2) == 0
    assert z4.add(3, 2) == 1
    z3 = make_zn(3)
    assert all(is_unit(z3, x) for x in range(1, 3))


def test_gf_construction():
    gf2 = make_gf(2)
    assert gf2.size == 2
    gf3 = make_gf(3)
    assert all(brute_power(gf3, a, 3) == a for a in gf3.elements())
    gf4 = make_gf(2, 2)
    assert all(brute_power(gf4, a, 4) == a for a in gf4.elements())
    with pytest.raises(ValidationError):
        make_gf(4)


def test_gf_modulus_is_deterministic():
    assert lowest_irreducible(2, 2) == (1, 1, 1)      # x^2 + x + 1
    assert lowest_irreducible(3, 2) == (1, 0, 1)      # x^2 + 1
    assert lowest_irreducible(2, 3) == (1, 1, 0, 1)   # x^3 + x + 1


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3), (5, 1)])
def test_gf_nonzero_elements_form_cyclic_group(p, k):
    ring = make_gf(p, k)
    q = p**k
    orders = set()
    for a in range(1, q):
        acc, n = a, 1
        while acc != ring.one:
            acc = ring.mul(acc, a)
            n += 1
        orders.add(n)
    assert max(orders) == q - 1  # a generator exists


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=lambda r: r.label)
def test_nilpotency_matches_brute_force(ring):
    for x in ring.elements():
        assert nilpotency_index(ring, x) == brute_nilpotency_index(ring, x)


def test_nilpotency_examples():
    z4 = make_zn(4)
    assert nilpotency_index(z4, 0) == 1
    assert nilpotency_index(z4, 2) == 2
    gf3 = make_gf(3)
    assert all(not is_nilpotent(gf3, x) for x in range(1, 3))


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=lambda r: r.label)
@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_m_potents_match_brute_force(ring, m):
    for x in ring.elements():
        assert is_m_potent(ring, x, m) == (brute_power(ring, x, m) == x)


def test_m_potent_examples():
    z3, z4 = make_zn(3), make_zn(4)
    assert is_m_potent(z3, 0, 5)
    assert is_m_potent(z3, 2, 3)
    assert not is_m_potent(z4, 2, 2)
    assert idempotents(z4) == [0, 1]
    with pytest.raises(ValidationError):
        is_m_potent(z4, 1, 1)


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=lambda r: r.label)
def test_units_match_brute_force(ring):
    for x in ring.elements():
        assert inverse_of(ring, x) == brute_inverse(ring, x)


def test_unit_examples():
    z4 = make_zn(4)
    assert inverse_of(z4, 1) == 1
    assert inverse_of(z4, 3) == 3
    assert not is_unit(z4, 2)


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=lambda r: r.label)
def test_nilpotent_and_unit_exclusive(ring):
    if ring.size == 1:
        return
    for x in ring.elements():
        assert not (is_nilpotent(ring, x) and is_unit(ring, x))


def test_jacobson_radical_examples():
    assert jacobson_radical(make_gf(3)) == frozenset({0})
    assert jacobson_radical(make_zn(4)) == frozenset({0, 2})
    assert jacobson_radical(make_zn(9)) == frozenset({0, 3, 6})


def test_radical_quotient_is_semiprimitive():
    for ring in (make_zn(4), make_zn(8), make_zn(9), make_zn(6)):
        rad = jacobson_radical(ring)
        assert ring.one not in rad
        quot, _ = quotient_ring(ring, rad)
        assert jacobson_radical(quot) == frozenset({0})


def test_is_nil_set():
    z4 = make_zn(4)
    assert is_nil_set(z4, {0})
    assert is_nil_set(z4, jacobson_radical(z4))
    assert not is_nil_set(z4, {1})


def test_quotient_examples():
    z4 = make_zn(4)
    whole, _ = quotient_ring(z4, set(range(4)))
    assert whole.size == 1
    q, proj = quotient_ring(z4, {0, 2})
    assert q.size == 2
    assert proj[0] == proj[2] and proj[1] == proj[3]
    assert q.mul(proj[3], proj[3]) == proj[1]
    iso, _ = quotient_ring(z4, {0})
    assert iso.size == 4


def test_quotient_rejects_non_ideal():
    z4 = make_zn(4)
    with pytest.raises(ValidationError) as err:
        quotient_ring(z4, {0, 1})
    assert err.value.witness is not None


def test_product_ring():
    z2, z4 = make_zn(2), make_zn(4)
    single = product_ring([z4])
    assert single.size == 4 and single.mul(3, 3) == 1
    p = product_ring([z2, z2])
    e10 = p.encode((1, 0))
    assert p.mul(e10, e10) == e10 and not is_unit(p, e10)
    p24 = product_ring([z2, z4])
    x = p24.encode((0, 2))
    assert nilpotency_index(p24, x) == 2
    check_ring_axioms(p24, cap=10)


def test_subring_extraction():
    z4 = make_zn(4)
    with pytest.raises(ValidationError):
        subring_from_elements(z4, {0, 2})  # misses 1
    p = product_ring([z4, z4])
    diag = {p.encode((a, a)) for a in range(4)}
    sub, index, members = subring_from_elements(p, diag)
    assert sub.size == 4
    assert sub.mul(index[p.encode((2, 2))], index[p.encode((2, 2))]) == 0


def test_table_ring_rejects_broken_laws():
    # multiplication table that is not associative
    add = [[0, 1], [1, 0]]
    bad_mul = [[0, 1], [1, 1]]
    with pytest.raises(ValidationError):
        TableRing(add, bad_mul, one=1)


def test_classify_element():
    z4 = make_zn(4)
    c = classify_element(z4, 2, ms=(2, 3))
    assert c.is_nilpotent and c.nilpotency_index == 2
    assert not c.is_unit and c.inverse is None
    assert c.m_potent_for == {2: False, 3: False}
    c1 = classify_element(z4, 1, ms=(2,))
    assert c1.is_unit and c1.inverse == 1 and c1.m_potent_for[2]


def test_gf_size_cap():
    from gradednil.errors import ResourceLimitError

    with pytest.raises(ResourceLimitError):
        make_gf(2, 9)  # 512^2 table entries exceed the default cap


def test_product_ring_cap():
    from gradednil.errors import ResourceLimitError

    with pytest.raises(ResourceLimitError):
        product_ring([make_zn(64), make_zn(64)], max_elements=1000)


def test_m_potent_cache_is_sorted_ascending():
    z9 = make_zn(9)
    pots = m_potents(z9, 3)
    assert pots == sorted(pots)
    assert pots == [x for x in z9.elements() if brute_power(z9, x, 3) == x]
