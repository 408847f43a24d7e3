"""Commutative rings with exact arithmetic and strongly discrete tests.

Ring elements are plain Python numbers (``int`` or ``Fraction``) kept in a
canonical form by their ring; a ring object is an immutable descriptor that
knows how to combine and test them.  Every ring here supports a zero test,
exact division with quotient and ideal membership with a coefficient
certificate.
"""

import re
from fractions import Fraction
from math import gcd
from operator import mul

from .charpoly import berkowitz
from .counting import tick, tick_membership
from .exceptions import CertificateInvalid, NotIdempotent, NotPrime, ParseError


def egcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def egcd_list(values):
    """Extended gcd of a list of integers.

    Returns ``(g, coeffs)`` with ``sum(c*v) == g``; ``g`` is 0 for an
    all-zero (or empty) list.
    """
    g = 0
    coeffs = []
    for v in values:
        g, s, t = egcd(g, v)
        coeffs = [c * s for c in coeffs]
        coeffs.append(t)
    return g, coeffs


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Ring:
    """Base class for the ring descriptors.

    Subclasses provide ``reduce`` (canonical form of a raw sum/product) and
    the strongly discrete primitives.  Arithmetic is native Python
    arithmetic followed by ``reduce``; every ring below is closed under
    that recipe.
    """

    is_finite = False
    is_field = False

    def __eq__(self, other):
        return self is other or (isinstance(other, Ring) and self.spec == other.spec)

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"<ring {self.spec}>"

    def __str__(self):
        return self.spec

    # arithmetic -----------------------------------------------------------

    def reduce(self, x):
        return x

    def add(self, a, b):
        tick()
        return self.reduce(a + b)

    def sub(self, a, b):
        tick()
        return self.reduce(a - b)

    def mul(self, a, b):
        tick()
        return self.reduce(a * b)

    def neg(self, a):
        return self.reduce(-a)

    def from_int(self, c):
        return self.reduce(c)

    def eq_zero(self, x):
        return self.reduce(x) == 0

    # same name as the matrix/Laurent domains use
    is_zero = eq_zero

    def eq(self, a, b):
        return self.reduce(a - b) == 0

    def sum(self, values):
        acc = 0
        n = 0
        for v in values:
            acc = acc + v
            n += 1
        tick(n)
        return self.reduce(acc)

    def dot(self, xs, ys):
        tick(2 * len(xs))
        return self.reduce(sum(map(mul, xs, ys)))

    def matmul(self, rows, cols):
        """Products of every row with every column (both lists of lists)."""
        if rows and cols:
            tick(2 * len(rows) * len(cols) * len(cols[0]))
        red = self.reduce
        return [[red(sum(map(mul, r, c))) for c in cols] for r in rows]

    def scale_rows(self, c, rows):
        tick(sum(map(len, rows)))
        red = self.reduce
        return [[red(c * x) for x in r] for r in rows]

    def add_rows(self, rows, others):
        tick(sum(map(len, rows)))
        red = self.reduce
        return [[red(a + b) for a, b in zip(r, s)] for r, s in zip(rows, others)]

    def sub_rows(self, rows, others):
        tick(sum(map(len, rows)))
        red = self.reduce
        return [[red(a - b) for a, b in zip(r, s)] for r, s in zip(rows, others)]

    def convolve(self, a, b):
        """Schoolbook product of two coefficient lists, reduced."""
        out = [0] * (len(a) + len(b) - 1)
        count = 0
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
                count += len(b)
        tick(2 * count)
        red = self.reduce
        return [red(c) for c in out]

    # strongly discrete tests ------------------------------------------------

    def divide(self, x, y):
        """Some ``z`` with ``x == z*y``, or ``None``."""
        raise NotImplementedError

    def inverse(self, x):
        return self.divide(self.one, x)

    def ideal_membership(self, x, gens):
        """Coefficients ``c`` with ``x == sum(c_i*gens_i)``, or ``None``."""
        raise NotImplementedError

    def one_in_ideal(self, gens):
        return self.ideal_membership(self.one, gens)

    def principal_generator(self, gens):
        """``(d, coeffs)`` with ``d == sum(coeffs_i*gens_i)`` and every
        generator a multiple of ``d``.

        All rings here are principal ideal rings; ``None`` means the ring
        cannot provide one and callers fall back to the generic route.
        """
        return None

    # text ------------------------------------------------------------------

    def parse_element(self, text):
        text = str(text).strip()
        try:
            if "/" in text:
                value = Fraction(text)
            else:
                value = int(text)
        except ValueError as exc:
            raise ParseError(f"bad element literal {text!r}") from exc
        return self.coerce(value)

    def coerce(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ParseError(f"{value} is not an element of {self.spec}")
            value = value.numerator
        return self.from_int(value)

    def format_element(self, x):
        return str(x)

    def elements(self):
        raise TypeError(f"{self.spec} is not finite")

    def _check(self, x, gens, coeffs):
        total = self.sum(self.reduce(c * g) for c, g in zip(coeffs, gens))
        if not self.eq(total, x):
            raise CertificateInvalid(
                f"membership certificate does not recombine in {self.spec}"
            )
        return coeffs


class Integers(Ring):
    spec = "Z"
    zero = 0
    one = 1

    def divide(self, x, y):
        tick_membership()
        if y == 0:
            return 0 if x == 0 else None
        q, r = divmod(x, y)
        return q if r == 0 else None

    def ideal_membership(self, x, gens):
        tick_membership()
        g, coeffs = egcd_list(gens)
        if g == 0:
            return [0] * len(gens) if x == 0 else None
        q, r = divmod(x, g)
        if r:
            return None
        return self._check(x, gens, [c * q for c in coeffs])

    def principal_generator(self, gens):
        return egcd_list(gens)


class Rationals(Ring):
    spec = "Q"
    zero = Fraction(0)
    one = Fraction(1)
    is_field = True

    def reduce(self, x):
        return x if isinstance(x, Fraction) else Fraction(x)

    def coerce(self, value):
        return Fraction(value)

    def divide(self, x, y):
        tick_membership()
        if y == 0:
            return self.zero if x == 0 else None
        return Fraction(x) / y

    def ideal_membership(self, x, gens):
        tick_membership()
        coeffs = [self.zero] * len(gens)
        if x == 0:
            return coeffs
        for i, g in enumerate(gens):
            if g != 0:
                coeffs[i] = Fraction(x) / g
                return self._check(x, gens, coeffs)
        return None

    def principal_generator(self, gens):
        coeffs = [self.zero] * len(gens)
        for i, g in enumerate(gens):
            if g != 0:
                coeffs[i] = 1 / Fraction(g)
                return self.one, coeffs
        return self.zero, coeffs

    def format_element(self, x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class ModularRing(Ring):
    """Residues modulo ``n``; ``n == 1`` is the trivial ring."""

    is_finite = True

    def __init__(self, n):
        if n < 1:
            raise ParseError(f"modulus must be >= 1, got {n}")
        self.n = n
        self.zero = 0
        self.one = 1 % n

    @property
    def spec(self):
        return f"Zmod:{self.n}"

    @property
    def size(self):
        return self.n

    def reduce(self, x):
        return x % self.n

    def coerce(self, value):
        if isinstance(value, Fraction):
            den = value.denominator % self.n
            if gcd(den, self.n) != 1:
                raise ParseError(f"{value} is not an element of {self.spec}")
            return value.numerator * pow(den, -1, self.n) % self.n
        return value % self.n

    def divide(self, x, y):
        tick_membership()
        n = self.n
        x %= n
        y %= n
        g = gcd(y, n)
        if x % g:
            return None
        modulus = n // g
        if modulus == 1:
            return 0
        return (x // g) * pow(y // g, -1, modulus) % modulus

    def ideal_membership(self, x, gens):
        tick_membership()
        n = self.n
        g, coeffs = egcd_list([v % n for v in gens] + [n])
        q, r = divmod(x % n, g)
        if r:
            return None
        return self._check(x, gens, [c * q % n for c in coeffs[:-1]])

    def principal_generator(self, gens):
        n = self.n
        g, coeffs = egcd_list([v % n for v in gens] + [n])
        return g % n, [c % n for c in coeffs[:-1]]

    def elements(self):
        return iter(range(self.n))


class PrimeField(ModularRing):
    is_field = True

    def __init__(self, p):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        super().__init__(p)

    @property
    def spec(self):
        return f"GF:{self.n}"

    def ideal_membership(self, x, gens):
        tick_membership()
        p = self.n
        coeffs = [0] * len(gens)
        if x % p == 0:
            return coeffs
        for i, g in enumerate(gens):
            if g % p:
                coeffs[i] = x * pow(g, -1, p) % p
                return self._check(x, gens, coeffs)
        return None


class IdempotentRetract(Ring):
    """The ring ``e*A`` for an idempotent ``e`` of ``A``, with unit ``e``.

    It is isomorphic to the localization ``A[1/e]``; keeping elements inside
    ``A`` lets certificates computed here be summed back in the base ring.
    """

    def __init__(self, base, e):
        e = base.reduce(e)
        if not base.eq(base.mul(e, e), e):
            raise NotIdempotent(f"{base.format_element(e)} is not idempotent in {base.spec}")
        self.base = base
        self.e = e
        # sums and products of elements of e*A stay in e*A
        self.reduce = base.reduce
        self.zero = base.zero
        self.one = e
        self.is_finite = base.is_finite
        self.is_field = False

    @property
    def spec(self):
        return f"retract({self.base.spec},{self.base.format_element(self.e)})"

    def from_int(self, c):
        return self.base.reduce(c * self.e)

    def coerce(self, value):
        return self.base.mul(self.e, self.base.coerce(value))

    def project(self, x):
        """Image of a base element under ``x -> e*x``."""
        return self.base.reduce(self.e * x)

    def divide(self, x, y):
        z = self.base.divide(x, y)
        return None if z is None else self.project(z)

    def ideal_membership(self, x, gens):
        coeffs = self.base.ideal_membership(x, gens)
        if coeffs is None:
            return None
        return [self.project(c) for c in coeffs]

    def principal_generator(self, gens):
        res = self.base.principal_generator(gens)
        if res is None:
            return None
        d, coeffs = res
        return self.project(d), [self.project(c) for c in coeffs]

    def format_element(self, x):
        return self.base.format_element(x)

    @property
    def size(self):
        return len(set(self.elements()))

    def elements(self):
        seen = set()
        for x in self.base.elements():
            y = self.project(x)
            if y not in seen:
                seen.add(y)
                yield y


Z = Integers()
Q = Rationals()

_SIMPLE = re.compile(r"^(GF|Zmod):\s*(\d+)$")


def make_ring(spec):
    """Build a ring from ``Z | Q | GF:<p> | Zmod:<n> | retract(<spec>, <element>)``."""
    if isinstance(spec, Ring):
        return spec
    text = str(spec).strip()
    if text == "Z":
        return Z
    if text == "Q":
        return Q
    m = _SIMPLE.match(text)
    if m:
        kind, value = m.group(1), int(m.group(2))
        return PrimeField(value) if kind == "GF" else ModularRing(value)
    if text.startswith("retract(") and text.endswith(")"):
        inner = text[len("retract("):-1]
        depth = 0
        split = None
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                split = i
        if split is None:
            raise ParseError(f"retract spec needs an element: {text!r}")
        base = make_ring(inner[:split])
        return IdempotentRetract(base, base.parse_element(inner[split + 1:]))
    raise ParseError(f"unknown ring spec {text!r}")


def retract(ring, e):
    """``ring`` itself when ``e`` is its unit, else the retract ``e*ring``."""
    if ring.eq(e, ring.one):
        return ring
    return IdempotentRetract(ring, e)


def idempotent_generator_of_ideal(ring, gens, reduce_first=True):
    """Idempotent ``e`` with ``<e> == <gens>``, or ``None``.

    A finitely generated ideal is idempotent exactly when it is generated by
    an idempotent: writing every generator as ``g = M g`` with ``M`` over the
    ideal, ``e = 1 - det(I - M)`` works.  ``M`` comes from membership
    certificates of each ``g_i`` in the ideal of pairwise products.

    With ``reduce_first`` the generators are first replaced by a single
    principal generator when the ring offers one; the certificate and the
    final checks are unchanged.
    """
    gens = _dedupe(ring, gens)
    if not gens:
        return ring.zero
    work = gens
    pg = ring.principal_generator(gens) if reduce_first else None
    if pg is not None:
        d, coeffs = pg
        ring._check(d, gens, coeffs)
        work = [d]
    e = _determinant_trick(ring, work)
    if e is None:
        return None
    if not ring.eq(ring.mul(e, e), e):
        raise CertificateInvalid("determinant trick produced a non-idempotent")
    for g in gens:
        if not ring.eq(ring.mul(e, g), g):
            raise CertificateInvalid("idempotent does not fix a generator")
    if ring.ideal_membership(e, gens) is None:
        raise CertificateInvalid("idempotent lies outside the ideal")
    return e


def _dedupe(ring, gens):
    out = []
    seen = set()
    for g in gens:
        g = ring.reduce(g)
        if g == 0 or g in seen:
            continue
        seen.add(g)
        out.append(g)
    return out


def _determinant_trick(ring, gens):
    n = len(gens)
    pairs = [(j, k) for j in range(n) for k in range(j, n)]
    products = [ring.mul(gens[j], gens[k]) for j, k in pairs]
    M = [[ring.zero] * n for _ in range(n)]
    for i, g in enumerate(gens):
        cert = ring.ideal_membership(g, products)
        if cert is None:
            return None
        for c, (j, k) in zip(cert, pairs):
            M[i][j] = ring.add(M[i][j], ring.mul(c, gens[k]))
    I_minus_M = [
        [ring.sub(ring.one if i == j else ring.zero, x) for j, x in enumerate(row)]
        for i, row in enumerate(M)
    ]
    det = berkowitz(I_minus_M, ring)[-1]
    return ring.sub(ring.one, det)
