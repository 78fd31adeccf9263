"""Deciding (strongly) m-nil clean properties, with certificates.

Run as: python demos/03_nil_clean_decisions.py
"""

from gradednil import (
    graded_m_nil_clean_witness,
    graded_pi_regular_witness,
    is_graded_m_nil_clean_ring,
    is_m_nil_clean_ring,
    lift_m_potent,
    m_nil_clean_witness,
    make_cyclic,
    make_gf,
    make_zn,
    strongly_pi_regular_from_m_nil_clean,
    triangular_graded,
    trivial_grading,
)

print("== plain decompositions ==")
z4 = make_zn(4)
for x in z4.elements():
    cert = m_nil_clean_witness(z4, x, 2)
    print(f"  {x} = {cert.f} + {cert.n}   (idempotent + nilpotent)")
print("Z4 is 2-nil clean:", is_m_nil_clean_ring(z4, 2))
print("GF(3) is 2-nil clean:", is_m_nil_clean_ring(make_gf(3), 2),
      " ...but 3-nil clean:", is_m_nil_clean_ring(make_gf(3), 3))

print("\n== graded decisions on the split triangular ring over GF(3) ==")
c2 = make_cyclic(2)
grading, _ = triangular_graded(trivial_grading(make_gf(3), c2), 2, [0, 1])
ok3, _ = is_graded_m_nil_clean_ring(grading, 3)
ok2, witness = is_graded_m_nil_clean_ring(grading, 2)
print("graded 3-nil clean:", ok3)
print("graded 2-nil clean:", ok2, "| first failing homogeneous element:",
      grading.ring.format_element(witness))

print("\n== strongly clean without pi-regularity ==")
tz2, _ = triangular_graded(trivial_grading(make_zn(2), c2), 2, [0, 1])
e12 = tz2.ring.encode_entries({(0, 1): 1})
cert = graded_m_nil_clean_witness(tz2, e12, 2, strong=True)
print(f"E12 = {tz2.ring.format_element(cert.f)} + {tz2.ring.format_element(cert.n)}, "
      f"commuting: {cert.commuting}")
print("graded pi-regular decomposition of E12:", graded_pi_regular_witness(tz2, e12))

print("\n== strongly pi-regular decompositions from clean certificates ==")
gf3 = make_gf(3)
w = m_nil_clean_witness(gf3, 2, 3, strong=True)
pr = strongly_pi_regular_from_m_nil_clean(gf3, w.f, w.n, 3)
print(f"2 in GF(3): m-potent part {w.f}, nilpotent {w.n} -> "
      f"idempotent {pr.f} + unit {pr.u}")

print("\n== lifting m-potents modulo a nil ideal ==")
z9 = make_zn(9)
f = lift_m_potent(z9, 4, {0, 3, 6}, 3)
print(f"x = 4 in Z9, ideal (3): lifted 3-potent f = {f} (f - x is in the ideal)")
