"""Dense Laurent polynomials over a base ring, i.e. elements of ``A[t, 1/t]``.

A value stores its lowest exponent (``val``) and the coefficient run from
there upward.  Ordinary polynomials are the values with ``val >= 0``.
"""

from .counting import tick
from .exceptions import RingMismatch


class LaurentPoly:
    __slots__ = ("ring", "val", "coeffs")

    def __init__(self, ring, val, coeffs):
        """Build a canonical value; ``coeffs`` need not be trimmed or reduced."""
        coeffs = list(map(ring.reduce, coeffs))
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        self.ring = ring
        if lo == hi:
            self.val = 0
            self.coeffs = ()
        else:
            self.val = val + lo
            self.coeffs = tuple(coeffs[lo:hi])

    @classmethod
    def _term(cls, ring, c, k):
        # trusted constructor for a single already-reduced coefficient
        out = object.__new__(cls)
        out.ring = ring
        if c == 0:
            out.val = 0
            out.coeffs = ()
        else:
            out.val = k
            out.coeffs = (c,)
        return out

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, 0, [c])

    @classmethod
    def monomial(cls, ring, c, k):
        return cls(ring, k, [c])

    @classmethod
    def from_dict(cls, ring, terms):
        """From ``{exponent: coefficient}``."""
        if not terms:
            return cls(ring, 0, [])
        lo, hi = min(terms), max(terms)
        return cls(ring, lo, [terms.get(k, ring.zero) for k in range(lo, hi + 1)])

    # structure -------------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def top(self):
        """Highest exponent; ``None`` for the zero polynomial."""
        return self.val + len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, k):
        i = k - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def terms(self):
        return [(self.val + i, c) for i, c in enumerate(self.coeffs) if c != 0]

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self.val == other.val and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        fmt = self.ring.format_element
        parts = []
        for k, c in self.terms():
            if k == 0:
                parts.append(fmt(c))
            elif k == 1:
                parts.append(f"{fmt(c)}*t")
            else:
                parts.append(f"{fmt(c)}*t^{k}")
        return " + ".join(parts)

    # arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return LaurentPoly(self.ring, 0, [self.ring.coerce(other)])

    def __add__(self, other):
        other = self._coerce(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.val, other.val)
        hi = max(self.top, other.top)
        out = [0] * (hi - lo + 1)
        off = self.val - lo
        for i, c in enumerate(self.coeffs):
            out[off + i] = c
        off = other.val - lo
        for i, c in enumerate(other.coeffs):
            out[off + i] += c
        tick(len(other.coeffs))
        return LaurentPoly(self.ring, lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, self.val, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if not self.coeffs or not other.coeffs:
            return LaurentPoly(self.ring, 0, [])
        return LaurentPoly(
            self.ring, self.val + other.val, self.ring.convolve(self.coeffs, other.coeffs)
        )

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = self.ring.coerce(c) if not isinstance(c, LaurentPoly) else c
        if isinstance(c, LaurentPoly):
            return self * c
        tick(len(self.coeffs))
        return LaurentPoly(self.ring, self.val, [c * x for x in self.coeffs])

    def shift(self, k):
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        out = LaurentPoly.__new__(LaurentPoly)
        out.ring = self.ring
        out.val = self.val + k
        out.coeffs = self.coeffs
        return out

    def map_coefficients(self, f):
        return LaurentPoly(self.ring, self.val, [f(c) for c in self.coeffs])


def laurent_arith(op, a, b):
    """Dispatch ``add | sub | mul | scale | shift`` on Laurent operands."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    if op == "shift":
        return a.shift(int(b))
    raise ValueError(f"unknown operation {op!r}")


def primitivity_certificate(p):
    """Certificate that the coefficients of ``p`` generate the unit ideal.

    The returned list is indexed like ``p.coeffs`` (ascending exponent from
    ``p.val``).  The zero polynomial is primitive only over the trivial ring.
    """
    ring = p.ring
    if not p.coeffs:
        if ring.eq_zero(ring.one):
            return []
        return None
    return ring.one_in_ideal(list(p.coeffs))


class LaurentRing:
    """Scalar domain ``A[t, 1/t]`` for matrix code."""

    def __init__(self, base):
        self.base = base
        self.zero = LaurentPoly(base, 0, [])
        self.one = LaurentPoly(base, 0, [base.one])

    def __eq__(self, other):
        return self is other or (isinstance(other, LaurentRing) and other.base == self.base)

    def __hash__(self):
        return hash(("laurent", self.base))

    @property
    def spec(self):
        return f"{self.base.spec}[t,1/t]"

    def __repr__(self):
        return f"<domain {self.spec}>"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return not a.coeffs

    def dot(self, xs, ys):
        acc = {}
        get = acc.get
        count = 0
        for x, y in zip(xs, ys):
            xc = x.coeffs
            yc = y.coeffs
            if not xc or not yc:
                continue
            off = x.val + y.val
            count += len(xc) * len(yc)
            if len(xc) == 1 and len(yc) == 1:
                acc[off] = get(off, 0) + xc[0] * yc[0]
                continue
            for i, a in enumerate(xc, off):
                if a:
                    for j, b in enumerate(yc, i):
                        acc[j] = get(j, 0) + a * b
        tick(2 * count)
        if not acc:
            return self.zero
        lo = min(acc)
        out = [0] * (max(acc) - lo + 1)
        for e, c in acc.items():
            out[e - lo] = c
        return LaurentPoly(self.base, lo, out)

    def matmul(self, rows, cols):
        dot = self.dot
        return [[dot(r, c) for c in cols] for r in rows]

    def scale_rows(self, c, rows):
        return [[c * x for x in r] for r in rows]

    def add_rows(self, rows, others):
        return [[a + b for a, b in zip(r, s)] for r, s in zip(rows, others)]

    def sub_rows(self, rows, others):
        return [[a - b for a, b in zip(r, s)] for r, s in zip(rows, others)]

    def eq(self, a, b):
        return a == b

    def from_int(self, c):
        return LaurentPoly(self.base, 0, [self.base.from_int(c)])

    def constant(self, c):
        return LaurentPoly(self.base, 0, [c])

    def format_element(self, x):
        return str(x)
