"""Gradings: components, decomposition, homogeneous ideals, graded radical.

The running example is the upper-triangular 2x2 ring over GF(3) with the
C2-grading that puts diagonals in degree 0 and the strictly-upper part in
degree 1.

Run as: python demos/02_gradings_and_radicals.py
"""

from gradednil import (
    ZERO_DEGREE,
    graded_jacobson_radical,
    graded_maximal_right_ideals,
    graded_quotient,
    homogeneous_right_ideal_closure,
    is_graded_local,
    is_graded_nil,
    make_gf,
    make_cyclic,
    triangular_graded,
    trivial_grading,
)

c2 = make_cyclic(2)
grading, strict_upper = triangular_graded(trivial_grading(make_gf(3), c2), 2, [0, 1])
ring = grading.ring

print(f"ring: {ring.label} with {ring.size} elements")
print("support:", sorted(grading.support))
for g in sorted(grading.support):
    print(f"  component {g}: {len(grading.components[g])} elements")

print("\ndecomposition of 1 + E12:")
x = ring.add(ring.one, ring.encode_entries({(0, 1): 1}))
for g, part in grading.decompose(x).items():
    print(f"  degree {g}: {ring.format_element(part)}")
print("degree of x:", grading.degree_of(x))
print("degree of 0:", grading.degree_of(0))

print("\nhomogeneous elements (element, degree):")
for x, g in grading.homogeneous_elements():
    label = "Zero" if g is ZERO_DEGREE else g
    print(f"  {ring.format_element(x):18s} degree {label}")

print("\nright ideal generated by E12:")
e12 = ring.encode_entries({(0, 1): 1})
ideal = homogeneous_right_ideal_closure(grading, [e12])
print("  elements:", [ring.format_element(x) for x in sorted(ideal.elements)])

maximal = graded_maximal_right_ideals(grading)
print(f"\n{len(maximal)} graded-maximal right ideals; graded-local:",
      is_graded_local(grading))
jg = graded_jacobson_radical(grading)
print("graded Jacobson radical:", [ring.format_element(x) for x in sorted(jg.elements)])
print("graded radical is graded-nil:", is_graded_nil(grading, jg))

quotient, proj = graded_quotient(grading, strict_upper)
print(f"\nquotient by the strictly-upper ideal: {quotient.ring.size} elements, "
      f"support {sorted(quotient.support)} (the degree-1 part collapses)")
