"""The graded constructions: matrix, triangular, diagonal-integer, group
ring, amalgamation, product - and what each decides.

Includes the library's sharpest finding: the group ring of C2 over Z4 is
plain 2-nil clean with a nilpotent augmentation ideal, yet NOT graded
2-nil clean, because the augmentation kernel is not homogeneous for the
canonical grading.

Run as: python demos/04_constructions_tour.py
"""

from gradednil import (
    AmalgamationSpec,
    amalgamation,
    augmentation_ideal,
    diagonal_z_grading,
    group_ring_graded,
    homogeneous_two_sided_ideal_closure,
    image_subring_grading,
    is_graded_m_nil_clean_ring,
    is_m_nil_clean_ring,
    make_cyclic,
    make_gf,
    make_zn,
    matrix_graded,
    product_grading,
    triangular_graded,
    trivial_grading,
)

c2 = make_cyclic(2)

print("== matrix ring with the diagonal/antidiagonal C2-split ==")
swap = matrix_graded(trivial_grading(make_zn(3), c2), 2, [0, 1])
print("components:", {g: len(c) for g, c in swap.components.items()})
print("graded 3-nil clean:", is_graded_m_nil_clean_ring(swap, 3)[0])

print("\n== diagonal integer grading of M2 ==")
diag = diagonal_z_grading(make_zn(4), 2)
print("support:", sorted(diag.support))
print("Z4 plain 2-nil clean:", is_m_nil_clean_ring(make_zn(4), 2),
      "-> diagonal-graded M2(Z4) graded 2-nil clean:",
      is_graded_m_nil_clean_ring(diag, 2)[0])
diag_neg = diagonal_z_grading(make_gf(3), 2)
print("GF(3) plain 2-nil clean:", is_m_nil_clean_ring(make_gf(3), 2),
      "-> diagonal-graded M2(GF3):", is_graded_m_nil_clean_ring(diag_neg, 2)[0])

print("\n== triangular rings transfer the property to and from the base ==")
for label, base, m in [("Z4", trivial_grading(make_zn(4), c2), 2),
                       ("GF(3)", trivial_grading(make_gf(3), c2), 2)]:
    tri, _ = triangular_graded(base, 3, [0, 1, 0])
    print(f"  base {label}: base {is_graded_m_nil_clean_ring(base, m)[0]}, "
          f"T3 {is_graded_m_nil_clean_ring(tri, m)[0]}")

print("\n== group rings: where the graded and plain worlds split ==")
rg = group_ring_graded(trivial_grading(make_zn(4), c2), c2)
kernel, nilidx = augmentation_ideal(rg)
ok, witness = is_graded_m_nil_clean_ring(rg, 2)
print(f"Z4[C2]: augmentation kernel size {len(kernel)}, nilpotency index {nilidx}")
print(f"Z4[C2]: plain 2-nil clean: {is_m_nil_clean_ring(rg.ring, 2)}")
print(f"Z4[C2]: graded 2-nil clean: {ok}  (blocking homogeneous element: "
      f"{rg.ring.format_element(witness)})")
rg3 = group_ring_graded(trivial_grading(make_zn(3), c2), c2)
print("Z3[C2] at m=3: graded 3-nil clean:", is_graded_m_nil_clean_ring(rg3, 3)[0],
      "(monomials are 3-potent: g^2 = e and b^3 = b)")

print("\n== amalgamation along an ideal ==")
z4 = trivial_grading(make_zn(4))
ideal = homogeneous_two_sided_ideal_closure(z4, [2])
spec = AmalgamationSpec(z4, trivial_grading(make_zn(4)), list(range(4)), ideal)
am = amalgamation(spec)
img = image_subring_grading(spec)
print(f"Z4 joined with itself along (2): {am.ring.size} elements; "
      f"graded 2-nil clean: {is_graded_m_nil_clean_ring(am, 2)[0]}; "
      f"image subring f(A)+J: {img.ring.size} elements")

print("\n== products decide factorwise ==")
tri_gf3, _ = triangular_graded(trivial_grading(make_gf(3), c2), 2, [0, 1])
prod = product_grading([tri_gf3, trivial_grading(make_gf(3), c2)])
print("T2(GF3) x GF(3) graded 3-nil clean:", is_graded_m_nil_clean_ring(prod, 3)[0])
print("same product at m=2:", is_graded_m_nil_clean_ring(prod, 2)[0])
