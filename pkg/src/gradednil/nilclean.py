"""Decision procedures for (strongly) m-nil clean decompositions.

An element is m-nil clean when it splits as an m-potent (f^m = f) plus a
nilpotent; "strongly" additionally requires the parts to commute.  In the
graded variants both parts must be homogeneous, which by uniqueness of the
component decomposition pins them to the component of the element being
split.  All searches run in ascending element order so returned witnesses
are deterministic.
"""

from dataclasses import dataclass

from .errors import Falsification, ValidationError
from .grading import Grading, NOT_HOMOGENEOUS, ZERO_DEGREE
from .groups import is_m_torsion_free
from .rings import (
    FiniteRing,
    idempotents,
    inverse_of,
    is_m_potent,
    is_nil_set,
    is_nilpotent,
    is_unit,
    m_potents,
)


@dataclass
class NilCleanCertificate:
    """Witness x = f + n with f m-potent and n nilpotent."""

    x: int
    f: int
    n: int
    m: int
    commuting: bool
    degree: object = None  # group element, ZERO_DEGREE, or None when ungraded

    def verify(self, ring: FiniteRing, grading: Grading | None = None) -> None:
        if ring.add(self.f, self.n) != self.x:
            raise ValidationError("certificate parts do not sum to x", ("sum", self.x))
        if not is_m_potent(ring, self.f, self.m):
            raise ValidationError("certificate f is not m-potent", ("mpotent", self.f))
        if not is_nilpotent(ring, self.n):
            raise ValidationError("certificate n is not nilpotent", ("nilpotent", self.n))
        if self.commuting and ring.mul(self.f, self.n) != ring.mul(self.n, self.f):
            raise ValidationError("certificate parts do not commute", ("commute",))
        if grading is not None:
            xdeg = grading.degree_of(self.x)
            for part in (self.f, self.n):
                d = grading.degree_of(part)
                if d is NOT_HOMOGENEOUS:
                    raise ValidationError("certificate part not homogeneous", ("degree", part))
                if part != 0 and self.x != 0 and d != xdeg:
                    raise ValidationError("certificate part in wrong component", ("degree", part))


@dataclass
class PiRegularCertificate:
    """Witness a = f + u with f idempotent, u a unit, af = fa, faf nilpotent."""

    a: int
    f: int
    u: int

    def verify(self, ring: FiniteRing, grading: Grading | None = None) -> None:
        if ring.add(self.f, self.u) != self.a:
            raise ValidationError("certificate parts do not sum to a", ("sum", self.a))
        if ring.mul(self.f, self.f) != self.f:
            raise ValidationError("certificate f is not idempotent", ("idempotent", self.f))
        if not is_unit(ring, self.u):
            raise ValidationError("certificate u is not a unit", ("unit", self.u))
        if ring.mul(self.a, self.f) != ring.mul(self.f, self.a):
            raise ValidationError("a and f do not commute", ("commute",))
        faf = ring.mul(self.f, ring.mul(self.a, self.f))
        if not is_nilpotent(ring, faf):
            raise ValidationError("faf is not nilpotent", ("faf", faf))
        if grading is not None:
            for part in (self.f, self.u):
                if grading.degree_of(part) is NOT_HOMOGENEOUS:
                    raise ValidationError("certificate part not homogeneous", ("degree", part))


# ---------------------------------------------------------------------------
# witnesses


def m_nil_clean_witness(ring: FiniteRing, x: int, m: int, strong: bool = False
                        ) -> NilCleanCertificate | None:
    """First (f, x - f) with f m-potent and x - f nilpotent, in element order."""
    for f in m_potents(ring, m):
        n = ring.sub(x, f)
        if not is_nilpotent(ring, n):
            continue
        if strong and ring.mul(f, n) != ring.mul(n, f):
            continue
        commuting = ring.mul(f, n) == ring.mul(n, f)
        cert = NilCleanCertificate(x=x, f=f, n=n, m=m, commuting=commuting)
        cert.verify(ring)
        return cert
    return None


def graded_m_nil_clean_witness(grading: Grading, x: int, m: int, strong: bool = False
                               ) -> NilCleanCertificate | None:
    """Component-restricted witness for a homogeneous element.

    Uniqueness of the component decomposition forces both parts into the
    component of x (or to zero), so only m-potents there are tried.
    """
    ring = grading.ring
    deg = grading.degree_of(x)
    if deg is NOT_HOMOGENEOUS:
        raise ValidationError("element is not homogeneous", ("element", x))
    if x == 0:
        cert = NilCleanCertificate(x=0, f=0, n=0, m=m, commuting=True, degree=ZERO_DEGREE)
        cert.verify(ring, grading)
        return cert
    candidates = grading.component_m_potents(deg, m)
    if 0 not in candidates:
        candidates = [0] + candidates
    for f in candidates:
        n = ring.sub(x, f)
        if not is_nilpotent(ring, n):
            continue
        if strong and ring.mul(f, n) != ring.mul(n, f):
            continue
        commuting = ring.mul(f, n) == ring.mul(n, f)
        cert = NilCleanCertificate(x=x, f=f, n=n, m=m, commuting=commuting, degree=deg)
        cert.verify(ring, grading)
        return cert
    return None


def is_m_nil_clean_ring(ring: FiniteRing, m: int, strong: bool = False) -> bool:
    """Whether every element splits as m-potent + nilpotent (commuting if strong)."""
    return m_nil_clean_ring_witness(ring, m, strong) is None


def m_nil_clean_ring_witness(ring: FiniteRing, m: int, strong: bool = False) -> int | None:
    """First element with no certificate, or None if the ring qualifies."""
    for x in ring.elements():
        if m_nil_clean_witness(ring, x, m, strong) is None:
            return x
    return None


def is_graded_m_nil_clean_ring(grading: Grading, m: int, strong: bool = False
                               ) -> tuple[bool, int | None]:
    """Decide whether every homogeneous element has a graded certificate.

    The identity component is scanned first (its cleanness is necessary);
    when the grading group is (m-1)-torsion free, a nonzero homogeneous
    m-potent cannot live outside the identity degree, so elements there
    qualify exactly when nilpotent and the scan uses that directly.
    Returns (decision, first failing homogeneous element or None).
    """
    if m < 2:
        raise ValidationError(f"m must be >= 2, got {m}")
    ring = grading.ring
    e = grading.group.identity
    for x in sorted(grading.component(e)):
        if graded_m_nil_clean_witness(grading, x, m, strong) is None:
            return False, x
    torsion_free = is_m_torsion_free(grading.group, m - 1)
    for g in sorted(grading.support):
        if g == e:
            continue
        for x in sorted(grading.components[g]):
            if x == 0:
                continue
            if torsion_free:
                if not is_nilpotent(ring, x):
                    return False, x
            elif graded_m_nil_clean_witness(grading, x, m, strong) is None:
                return False, x
    return True, None


# ---------------------------------------------------------------------------
# pi-regular decompositions


def pi_regular_witness(ring: FiniteRing, a: int) -> PiRegularCertificate | None:
    """First strongly pi-regular decomposition a = f + u, in element order."""
    for f in idempotents(ring):
        u = ring.sub(a, f)
        if inverse_of(ring, u) is None:
            continue
        if ring.mul(a, f) != ring.mul(f, a):
            continue
        faf = ring.mul(f, ring.mul(a, f))
        if not is_nilpotent(ring, faf):
            continue
        cert = PiRegularCertificate(a=a, f=f, u=u)
        cert.verify(ring)
        return cert
    return None


def graded_pi_regular_witness(grading: Grading, a: int) -> PiRegularCertificate | None:
    """Search over homogeneous idempotents f with homogeneous unit a - f."""
    ring = grading.ring
    if grading.degree_of(a) is NOT_HOMOGENEOUS:
        raise ValidationError("element is not homogeneous", ("element", a))
    for f in grading.homogeneous_idempotents():
        u = ring.sub(a, f)
        if grading.degree_of(u) is NOT_HOMOGENEOUS:
            continue
        if u == 0:
            if ring.size != 1:
                continue
        elif grading.homogeneous_unit_inverse(u) is None:
            continue
        if ring.mul(a, f) != ring.mul(f, a):
            continue
        faf = ring.mul(f, ring.mul(a, f))
        if not is_nilpotent(ring, faf):
            continue
        cert = PiRegularCertificate(a=a, f=f, u=u)
        cert.verify(ring, grading)
        return cert
    return None


def strongly_pi_regular_from_m_nil_clean(ring: FiniteRing, f: int, n: int, m: int
                                         ) -> PiRegularCertificate:
    """Turn a commuting m-potent + nilpotent pair into a pi-regular witness.

    For a = f + n the decomposition is a = (1 - f^(m-1)) + (v + n) with
    v = f + f^(m-1) - 1 a unit; all certificate invariants are re-verified
    before returning.
    """
    if m < 2:
        raise ValidationError(f"m must be >= 2, got {m}")
    if not is_m_potent(ring, f, m):
        raise ValidationError("f is not m-potent", ("mpotent", f))
    if not is_nilpotent(ring, n):
        raise ValidationError("n is not nilpotent", ("nilpotent", n))
    if ring.mul(f, n) != ring.mul(n, f):
        raise ValidationError("f and n do not commute", ("commute",))
    fm1 = ring.power(f, m - 1)
    idem = ring.sub(ring.one, fm1)
    v = ring.sub(ring.add(f, fm1), ring.one)
    u = ring.add(v, n)
    cert = PiRegularCertificate(a=ring.add(f, n), f=idem, u=u)
    cert.verify(ring)
    return cert


def strongly_pi_regular_certificates(ring: FiniteRing, a: int) -> list[PiRegularCertificate]:
    """Every strongly pi-regular decomposition of a (for uniqueness checks)."""
    out = []
    for f in idempotents(ring):
        u = ring.sub(a, f)
        if inverse_of(ring, u) is None:
            continue
        if ring.mul(a, f) != ring.mul(f, a):
            continue
        faf = ring.mul(f, ring.mul(a, f))
        if not is_nilpotent(ring, faf):
            continue
        out.append(PiRegularCertificate(a=a, f=f, u=u))
    return out


def strongly_pi_regular_uniqueness_check(ring: FiniteRing, a: int) -> bool:
    """True iff at most one strongly pi-regular decomposition of a exists."""
    return len(strongly_pi_regular_certificates(ring, a)) <= 1


# ---------------------------------------------------------------------------
# lifting and the commuting-equivalence checks


def lift_m_potent(ring: FiniteRing, x: int, ideal, m: int) -> int:
    """Find f with f^m = f and f - x in the nil ideal, by coset search.

    Preconditions (each rejected by name when violated): m - 1 must be a
    unit, the ideal must be nil, and x^m - x must lie in it.  Under these
    the lift is guaranteed to exist; absence raises Falsification rather
    than an ordinary error.
    """
    ideal = frozenset(ideal)
    if m < 2:
        raise ValidationError(f"m must be >= 2, got {m}")
    if not is_unit(ring, ring.from_int(m - 1)):
        raise ValidationError("precondition violated: m - 1 is not a unit", ("unit", m - 1))
    if not is_nil_set(ring, ideal):
        raise ValidationError("precondition violated: ideal is not nil", ("nil",))
    if ring.sub(ring.power(x, m), x) not in ideal:
        raise ValidationError(
            "precondition violated: x^m - x is not in the ideal", ("membership", x)
        )
    if is_m_potent(ring, x, m):
        return x
    for f in sorted(ring.add(x, i) for i in ideal):
        if is_m_potent(ring, f, m):
            return f
    raise Falsification(
        "guaranteed m-potent lift modulo a nil ideal was not found",
        {"ring": ring.label, "x": x, "m": m, "ideal_size": len(ideal)},
    )


def prop_commuting_equivalence_check(ring: FiniteRing, a: int, f: int, u: int, m: int) -> bool:
    """Equivalence test: given a strongly pi-regular decomposition (f, u) of
    a, [a is strongly m-nil clean] iff [some m-potent g commutes with f and
    u and f - g + u is nilpotent].  Returns whether the two sides agree."""
    cert = PiRegularCertificate(a=a, f=f, u=u)
    cert.verify(ring)
    exists_g = False
    for g in m_potents(ring, m):
        if ring.mul(g, f) != ring.mul(f, g):
            continue
        if ring.mul(g, u) != ring.mul(u, g):
            continue
        if is_nilpotent(ring, ring.add(ring.sub(f, g), u)):
            exists_g = True
            break
    strongly = m_nil_clean_witness(ring, a, m, strong=True) is not None
    return exists_g == strongly


def graded_commuting_equivalence_check(grading: Grading, a: int, f: int, u: int, m: int) -> bool:
    """Graded version: g must be a homogeneous m-potent in the identity
    component and u must lie there too.  Requires an (m-1)-torsion free
    grading group; (f, u) must be a graded strongly pi-regular witness."""
    if not is_m_torsion_free(grading.group, m - 1):
        raise ValidationError(
            "precondition violated: grading group is not (m-1)-torsion free", ("torsion", m - 1)
        )
    ring = grading.ring
    cert = PiRegularCertificate(a=a, f=f, u=u)
    cert.verify(ring, grading)
    e = grading.group.identity
    u_in_e = grading.degree_of(u) in (ZERO_DEGREE, e)
    exists_g = False
    if u_in_e:
        for g in grading.component_m_potents(e, m):
            if ring.mul(g, f) != ring.mul(f, g):
                continue
            if ring.mul(g, u) != ring.mul(u, g):
                continue
            if is_nilpotent(ring, ring.add(ring.sub(f, g), u)):
                exists_g = True
                break
    strongly = (
        grading.is_homogeneous(a)
        and graded_m_nil_clean_witness(grading, a, m, strong=True) is not None
    )
    return exists_g == strongly
