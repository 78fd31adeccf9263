"""Finite unital rings on element indices, with exact classification queries.

Every ring exposes elements as indices ``0..size-1`` where index 0 is the
zero element.  Small leaf rings (Z_n, GF(q), quotients, subrings) carry
explicit operation tables; the large constructed rings in
:mod:`gradednil.constructions` override the arithmetic methods instead and
never materialize tables.
"""

from dataclasses import dataclass, field

from .errors import ResourceLimitError, ValidationError
from .groups import is_prime

# Pairwise ring laws are checked exhaustively up to this many elements when a
# raw table is supplied; the cubic associativity/distributivity sweeps use the
# same cap.  Rings derived from already-valid rings skip the sweep.
LAW_CHECK_CAP = 64

# Classical radical computation is quadratic in ring size.
RADICAL_SIZE_CAP = 4096


class FiniteRing:
    """Base class: finite unital ring on indices with 0 as the zero element."""

    size: int
    one: int
    label: str
    zero = 0

    def __init__(self):
        self._memo: dict = {}

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def elements(self) -> range:
        return range(self.size)

    def power(self, a: int, k: int) -> int:
        """a^k for k >= 0 (k = 0 gives the identity)."""
        if k < 0:
            raise ValidationError("negative ring powers are undefined")
        acc = self.one
        base = a
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def from_int(self, n: int) -> int:
        """Image of the integer n under the canonical map k -> k*1."""
        acc = 0
        step = self.one if n >= 0 else self.neg(self.one)
        for _ in range(abs(n)):
            acc = self.add(acc, step)
        return acc

    def additive_generators(self) -> list[int]:
        """A small set of elements whose additive span is the whole ring."""
        gens = self._memo.get("addgens")
        if gens is None:
            gens = []
            span = frozenset({0})
            for x in self.elements():
                if x not in span:
                    gens.append(x)
                    span = additive_span(self, list(span) + [x])
                if len(span) == self.size:
                    break
            self._memo["addgens"] = gens
        return gens

    def is_commutative(self) -> bool:
        val = self._memo.get("commutative")
        if val is None:
            val = True
            for a in self.elements():
                for b in self.elements():
                    if self.mul(a, b) != self.mul(b, a):
                        val = False
                        break
                if not val:
                    break
            self._memo["commutative"] = val
        return val

    def format_element(self, x: int) -> str:
        return str(x)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label}, size={self.size})"


class TableRing(FiniteRing):
    """Ring backed by explicit addition/multiplication index tables."""

    def __init__(
        self,
        add_table: list[list[int]],
        mul_table: list[list[int]],
        one: int,
        label: str = "",
        element_names: list[str] | None = None,
        validate: bool = True,
    ):
        super().__init__()
        self.size = len(add_table)
        self.add_table = add_table
        self.mul_table = mul_table
        self.one = one
        self.label = label or f"ring{self.size}"
        self.element_names = element_names
        self._neg = self._build_neg()
        if validate:
            check_ring_axioms(self)

    def _build_neg(self) -> list[int]:
        neg = [None] * self.size
        for a in range(self.size):
            row = self.add_table[a]
            for b in range(self.size):
                if row[b] == 0:
                    neg[a] = b
                    break
            if neg[a] is None:
                raise ValidationError("element has no additive inverse", ("neg", a))
        return neg

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def format_element(self, x: int) -> str:
        if self.element_names is not None:
            return self.element_names[x]
        return str(x)


def check_ring_axioms(ring: FiniteRing, cap: int = LAW_CHECK_CAP) -> None:
    """Exhaustively assert the ring laws, up to `cap` elements for the cubic ones.

    Raises ValidationError with a witness tuple on the first violated law.
    """
    n = ring.size
    if n == 0:
        raise ValidationError("empty ring")
    for a in range(n):
        if ring.add(0, a) != a or ring.add(a, 0) != a:
            raise ValidationError("0 is not an additive identity", ("zero", a))
        if ring.add(a, ring.neg(a)) != 0:
            raise ValidationError("negation law fails", ("neg", a))
        if ring.mul(ring.one, a) != a or ring.mul(a, ring.one) != a:
            raise ValidationError("1 is not a multiplicative identity", ("one", a))
    for a in range(n):
        for b in range(n):
            if ring.add(a, b) != ring.add(b, a):
                raise ValidationError("addition is not commutative", ("addcomm", a, b))
    if n > cap:
        return
    for a in range(n):
        for b in range(n):
            ab = ring.add(a, b)
            for c in range(n):
                if ring.add(ab, c) != ring.add(a, ring.add(b, c)):
                    raise ValidationError("addition is not associative", ("addassoc", a, b, c))
    for a in range(n):
        for b in range(n):
            ab = ring.mul(a, b)
            for c in range(n):
                if ring.mul(ab, c) != ring.mul(a, ring.mul(b, c)):
                    raise ValidationError("multiplication is not associative", ("mulassoc", a, b, c))
                if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)):
                    raise ValidationError("left distributivity fails", ("ldist", a, b, c))
                if ring.mul(ring.add(b, c), a) != ring.add(ring.mul(b, a), ring.mul(c, a)):
                    raise ValidationError("right distributivity fails", ("rdist", a, b, c))


# ---------------------------------------------------------------------------
# constructors


def make_zn(n: int) -> TableRing:
    """Integers modulo n (n = 1 gives the zero ring)."""
    if n < 1:
        raise ValidationError(f"modulus must be >= 1, got {n}")
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    return TableRing(add, mul, one=1 % n, label=f"Z{n}", validate=False)


def _poly_mul_mod(a: tuple, b: tuple, modulus: tuple, p: int) -> tuple:
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce modulo the monic modulus
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(k + 1):
                prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
    return tuple(prod[:k])


def _poly_divides(d: tuple, f: tuple, p: int) -> bool:
    """Whether monic d divides f over Z_p (coefficients low-order first)."""
    rem = list(f)
    dd = len(d) - 1
    inv_lead = pow(d[-1], p - 2, p)  # d monic => 1, kept for clarity
    while len(rem) - 1 >= dd:
        c = (rem[-1] * inv_lead) % p
        shift = len(rem) - 1 - dd
        if c:
            for j in range(dd + 1):
                rem[shift + j] = (rem[shift + j] - c * d[j]) % p
        rem.pop()
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
    return all(c == 0 for c in rem)


def _is_irreducible(f: tuple, p: int) -> bool:
    k = len(f) - 1
    for deg in range(1, k // 2 + 1):
        for idx in range(p**deg):
            d = _digits(idx, p, deg) + (1,)
            if _poly_divides(d, f, p):
                return False
    return True


def _digits(idx: int, base: int, width: int) -> tuple:
    out = []
    for _ in range(width):
        out.append(idx % base)
        idx //= base
    return tuple(out)


def lowest_irreducible(p: int, k: int) -> tuple:
    """Monic irreducible x^k + ... over Z_p with the smallest low-coefficient
    encoding; fixes the GF(p^k) tables reproducibly."""
    for idx in range(p**k):
        f = _digits(idx, p, k) + (1,)
        if _is_irreducible(f, p):
            return f
    raise ValidationError(f"no irreducible of degree {k} over Z_{p}")  # unreachable


def make_gf(p: int, k: int = 1, max_size: int = 65536) -> TableRing:
    """The field GF(p^k), built from a fixed irreducible modulus."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if k < 1:
        raise ValidationError(f"extension degree must be >= 1, got {k}")
    q = p**k
    if q * q > max_size:
        raise ResourceLimitError(f"GF({q}) tables exceed cap", limit=max_size)
    if k == 1:
        ring = make_zn(p)
        ring.label = f"GF({p})"
        return ring
    modulus = lowest_irreducible(p, k)
    elems = [_digits(i, p, k) for i in range(q)]
    index = {e: i for i, e in enumerate(elems)}
    add = [
        [index[tuple((x + y) % p for x, y in zip(a, b))] for b in elems] for a in elems
    ]
    mul = [[index[_poly_mul_mod(a, b, modulus, p)] for b in elems] for a in elems]

    def name(e):
        if not any(e):
            return "0"
        terms = []
        for i in range(k - 1, -1, -1):
            c = e[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "a" if i == 1 else f"a^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)

    return TableRing(
        add, mul, one=index[(1,) + (0,) * (k - 1)], label=f"GF({q})",
        element_names=[name(e) for e in elems], validate=False,
    )


# ---------------------------------------------------------------------------
# element classification


def nilpotency_index(ring: FiniteRing, x: int) -> int | None:
    """Least k >= 1 with x^k = 0, or None; iterates powers with a seen-set."""
    memo = ring._memo.setdefault("nilidx", {})
    if x in memo:
        return memo[x]
    seen = set()
    p = x
    k = 1
    while p not in seen:
        if p == 0:
            memo[x] = k
            return k
        seen.add(p)
        p = ring.mul(p, x)
        k += 1
    memo[x] = None
    return None


def is_nilpotent(ring: FiniteRing, x: int) -> bool:
    return nilpotency_index(ring, x) is not None


def is_m_potent(ring: FiniteRing, x: int, m: int) -> bool:
    """Whether x^m = x (m >= 2; m = 2 is the idempotent case)."""
    if m < 2:
        raise ValidationError(f"potency exponent must be >= 2, got {m}")
    return ring.power(x, m) == x


def m_potents(ring: FiniteRing, m: int) -> list[int]:
    key = ("mpotents", m)
    out = ring._memo.get(key)
    if out is None:
        out = [x for x in ring.elements() if is_m_potent(ring, x, m)]
        ring._memo[key] = out
    return out


def idempotents(ring: FiniteRing) -> list[int]:
    return m_potents(ring, 2)


def inverse_of(ring: FiniteRing, x: int) -> int | None:
    """Two-sided inverse of x, or None.

    Both sides are checked even though finite rings are Dedekind-finite.
    """
    memo = ring._memo.setdefault("inv", {})
    if x in memo:
        return memo[x]
    found = None
    one = ring.one
    for y in ring.elements():
        if ring.mul(x, y) == one and ring.mul(y, x) == one:
            found = y
            break
    memo[x] = found
    return found


def is_unit(ring: FiniteRing, x: int) -> bool:
    return inverse_of(ring, x) is not None


def unit_map(ring: FiniteRing) -> dict[int, int]:
    """All units with their inverses, computed in one quadratic sweep."""
    units = ring._memo.get("unitmap")
    if units is None:
        units = {}
        one = ring.one
        for a in ring.elements():
            for b in ring.elements():
                if ring.mul(a, b) == one and ring.mul(b, a) == one:
                    units[a] = b
                    break
        ring._memo["unitmap"] = units
    return units


def is_nil_set(ring: FiniteRing, elems) -> bool:
    return all(is_nilpotent(ring, x) for x in elems)


def jacobson_radical(ring: FiniteRing, max_size: int = RADICAL_SIZE_CAP) -> frozenset[int]:
    """{ z : 1 - x*z is a unit for all x }, exact for finite rings."""
    if ring.size > max_size:
        raise ResourceLimitError(
            f"radical of a {ring.size}-element ring exceeds cap", limit=max_size
        )
    rad = ring._memo.get("jacobson")
    if rad is not None:
        return rad
    units = unit_map(ring)
    one = ring.one
    rad = []
    for z in ring.elements():
        if all(ring.sub(one, ring.mul(x, z)) in units for x in ring.elements()):
            rad.append(z)
    rad = frozenset(rad)
    _assert_two_sided_ideal(ring, rad)
    ring._memo["jacobson"] = rad
    return rad


def _assert_two_sided_ideal(ring: FiniteRing, ideal: frozenset) -> None:
    for a in ideal:
        if ring.neg(a) not in ideal:
            raise ValidationError("set not closed under negation", ("neg", a))
        for b in ideal:
            if ring.add(a, b) not in ideal:
                raise ValidationError("set not closed under addition", ("add", a, b))
        for r in ring.elements():
            if ring.mul(r, a) not in ideal or ring.mul(a, r) not in ideal:
                raise ValidationError("set not closed under multiplication", ("mul", r, a))


def verify_two_sided_ideal(ring: FiniteRing, elems) -> frozenset[int]:
    """Check ideal closure, returning the set; witness-carrying rejection."""
    ideal = frozenset(elems)
    if 0 not in ideal:
        raise ValidationError("ideal must contain 0", ("zero",))
    _assert_two_sided_ideal(ring, ideal)
    return ideal


# ---------------------------------------------------------------------------
# additive spans, quotients, products, subrings


def additive_span(ring: FiniteRing, gens) -> frozenset[int]:
    """Smallest additive subgroup containing `gens`."""
    span = {0}
    add = ring.add
    for g in gens:
        if g in span:
            continue
        base = list(span)
        k = g
        while k not in span:
            span.update(add(x, k) for x in base)
            k = add(k, g)
    return frozenset(span)


def quotient_ring(ring: FiniteRing, ideal) -> tuple[TableRing, list[int]]:
    """Quotient by a verified two-sided ideal; returns (ring, projection).

    Cosets are indexed by ascending least representative, so the zero coset
    keeps index 0.
    """
    ideal = verify_two_sided_ideal(ring, ideal)
    proj: list[int | None] = [None] * ring.size
    reps: list[int] = []
    for x in ring.elements():
        if proj[x] is None:
            cid = len(reps)
            reps.append(x)
            for i in ideal:
                proj[ring.add(x, i)] = cid
    n = len(reps)
    add = [[proj[ring.add(reps[i], reps[j])] for j in range(n)] for i in range(n)]
    mul = [[proj[ring.mul(reps[i], reps[j])] for j in range(n)] for i in range(n)]
    names = [f"{ring.format_element(r)}+I" for r in reps]
    quot = TableRing(
        add, mul, one=proj[ring.one], label=f"{ring.label}/I({len(ideal)})",
        element_names=names, validate=False,
    )
    return quot, proj  # type: ignore[return-value]


class ProductRing(FiniteRing):
    """Direct product with componentwise operations; indices are mixed-radix."""

    def __init__(self, factors: list[FiniteRing], max_elements: int = 1 << 20):
        super().__init__()
        if not factors:
            raise ValidationError("product of zero rings is not supported")
        self.factors = list(factors)
        size = 1
        for f in factors:
            size *= f.size
        if size > max_elements:
            raise ResourceLimitError("product ring exceeds element cap", limit=max_elements)
        self.size = size
        self.one = self.encode([f.one for f in factors])
        self.label = " x ".join(f.label for f in factors)

    def encode(self, parts) -> int:
        idx = 0
        for f, p in zip(reversed(self.factors), reversed(list(parts))):
            idx = idx * f.size + p
        return idx

    def decode(self, x: int) -> tuple:
        out = []
        for f in self.factors:
            x, r = divmod(x, f.size)
            out.append(r)
        return tuple(out)

    def add(self, a: int, b: int) -> int:
        return self.encode(
            [f.add(x, y) for f, x, y in zip(self.factors, self.decode(a), self.decode(b))]
        )

    def neg(self, a: int) -> int:
        return self.encode([f.neg(x) for f, x in zip(self.factors, self.decode(a))])

    def mul(self, a: int, b: int) -> int:
        return self.encode(
            [f.mul(x, y) for f, x, y in zip(self.factors, self.decode(a), self.decode(b))]
        )

    def additive_generators(self) -> list[int]:
        gens = []
        for i, f in enumerate(self.factors):
            for g in f.additive_generators():
                parts = [0] * len(self.factors)
                parts[i] = g
                gens.append(self.encode(parts))
        return gens

    def format_element(self, x: int) -> str:
        parts = self.decode(x)
        return "(" + ", ".join(f.format_element(p) for f, p in zip(self.factors, parts)) + ")"


def product_ring(factors: list[FiniteRing], max_elements: int = 1 << 20) -> ProductRing:
    return ProductRing(factors, max_elements=max_elements)


def subring_from_elements(ring: FiniteRing, elems, label: str = "") -> tuple[TableRing, dict, list]:
    """Materialize a closed subset containing 0 and 1 as a TableRing.

    Returns (subring, index_of: ambient -> sub, element_of: sub -> ambient).
    The subset must be closed under add/neg/mul; violations are witnessed.
    """
    elems = sorted(set(elems))
    index = {x: i for i, x in enumerate(elems)}
    if 0 not in index:
        raise ValidationError("subring must contain 0")
    if ring.one not in index:
        raise ValidationError("subring must contain 1")
    n = len(elems)
    add = [[None] * n for _ in range(n)]
    mul = [[None] * n for _ in range(n)]
    for i, x in enumerate(elems):
        if ring.neg(x) not in index:
            raise ValidationError("subset not closed under negation", ("neg", x))
        for j, y in enumerate(elems):
            s = ring.add(x, y)
            p = ring.mul(x, y)
            if s not in index or p not in index:
                raise ValidationError("subset not closed", ("closure", x, y))
            add[i][j] = index[s]
            mul[i][j] = index[p]
    sub = TableRing(
        add, mul, one=index[ring.one], label=label or f"sub({ring.label},{n})",
        element_names=[ring.format_element(x) for x in elems], validate=False,
    )
    return sub, index, elems


# ---------------------------------------------------------------------------
# classification record


@dataclass
class ElementClass:
    """Classification snapshot of one element (used by report rendering)."""

    element: int
    is_nilpotent: bool
    nilpotency_index: int | None
    is_unit: bool
    inverse: int | None
    m_potent_for: dict[int, bool] = field(default_factory=dict)


def classify_element(ring: FiniteRing, x: int, ms=()) -> ElementClass:
    idx = nilpotency_index(ring, x)
    inv = inverse_of(ring, x)
    return ElementClass(
        element=x,
        is_nilpotent=idx is not None,
        nilpotency_index=idx,
        is_unit=inv is not None,
        inverse=inv,
        m_potent_for={m: is_m_potent(ring, x, m) for m in ms},
    )
