"""Tour of the finite building blocks: groups, rings, element classification.

Run as: python demos/01_rings_and_groups.py
"""

from gradednil import (
    classify_element,
    direct_product,
    element_order,
    is_m_torsion_free,
    is_p_group,
    jacobson_radical,
    make_cyclic,
    make_gf,
    make_zn,
    quotient_ring,
)

print("== groups ==")
c2, c3 = make_cyclic(2), make_cyclic(3)
c6 = direct_product(c2, c3)
print(f"{c6.name}: orders of elements:", [element_order(c6, g) for g in c6.elements()])
print("C6 a 2-group?", is_p_group(c6, 2), " C4 a 2-group?", is_p_group(make_cyclic(4), 2))
print("C2 torsion-free for exponent 2?", is_m_torsion_free(c2, 2))
print("C3 torsion-free for exponent 2?", is_m_torsion_free(c3, 2))

print("\n== rings ==")
z4 = make_zn(4)
for x in z4.elements():
    c = classify_element(z4, x, ms=(2, 3))
    tags = []
    if c.is_nilpotent:
        tags.append(f"nilpotent (index {c.nilpotency_index})")
    if c.is_unit:
        tags.append(f"unit (inverse {c.inverse})")
    if c.m_potent_for[2]:
        tags.append("idempotent")
    print(f"  {x} in Z4: {', '.join(tags) or 'none of the special classes'}")

print("Jacobson radical of Z4:", sorted(jacobson_radical(z4)))
q, proj = quotient_ring(z4, jacobson_radical(z4))
print(f"Z4 / J(Z4) has {q.size} elements (semiprimitive quotient)")

print("\n== finite fields ==")
gf9 = make_gf(3, 2)
print(f"{gf9.label} built from a fixed irreducible modulus; sample products:")
for a, b in [(3, 3), (4, 5), (8, 8)]:
    print(f"  {gf9.format_element(a)} * {gf9.format_element(b)} = "
          f"{gf9.format_element(gf9.mul(a, b))}")
print("every element of GF(9) satisfies x^9 = x:",
      all(gf9.power(x, 9) == x for x in gf9.elements()))
