"""Exact dense matrices and the determinantal toolkit built on them.

A :class:`Matrix` holds rows over a scalar domain: either a ring from
:mod:`ginv.rings` or a :class:`~ginv.laurent.LaurentRing`.  Determinants and
characteristic series are computed without division, so everything here is
valid over rings with zero divisors.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from .charpoly import berkowitz
from .exceptions import BadIndexSet, DimensionMismatch, NotProjection, NotSquare
from .laurent import LaurentPoly, LaurentRing


class Matrix:
    __slots__ = ("domain", "rows", "m", "n")

    def __init__(self, domain, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix rows")
        self.domain = domain
        self.rows = rows
        self.m = len(rows)
        self.n = ncols

    @classmethod
    def _raw(cls, domain, rows, ncols):
        # trusted internal constructor: rows are fresh, rectangular lists
        out = object.__new__(cls)
        out.domain = domain
        out.rows = rows
        out.m = len(rows)
        out.n = ncols
        return out

    # construction ----------------------------------------------------------

    @classmethod
    def from_values(cls, domain, values, ncols=None):
        """Coerce raw numbers (or literals) into canonical entries."""
        def conv(v):
            if isinstance(v, LaurentPoly):
                return v
            if isinstance(v, (int, Fraction)):
                return domain.coerce(v)
            return domain.parse_element(v)

        return cls(domain, [[conv(v) for v in row] for row in values], ncols)

    @classmethod
    def zeros(cls, domain, m, n):
        return cls(domain, [[domain.zero] * n for _ in range(m)], n)

    @classmethod
    def identity(cls, domain, n):
        z, o = domain.zero, domain.one
        return cls(domain, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def column(cls, domain, values):
        return cls.from_values(domain, [[v] for v in values], 1)

    # basics ----------------------------------------------------------------

    @property
    def shape(self):
        return (self.m, self.n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.domain == other.domain
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.m, self.n, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        fmt = self.domain.format_element
        body = "; ".join(", ".join(fmt(x) for x in r) for r in self.rows)
        return f"Matrix<{self.domain.spec}>[{body}]({self.m}x{self.n})"

    def tolist(self):
        return [list(r) for r in self.rows]

    def is_zero(self):
        isz = self.domain.is_zero
        return all(isz(x) for r in self.rows for x in r)

    def map(self, f, domain=None):
        return Matrix._raw(domain or self.domain, [[f(x) for x in r] for r in self.rows], self.n)

    def transpose(self):
        rows = self.rows
        return Matrix._raw(self.domain, [[r[j] for r in rows] for j in range(self.n)], self.m)

    @property
    def T(self):
        return self.transpose()

    def submatrix(self, rows, cols):
        """0-based row/column selection."""
        return Matrix(self.domain, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    # arithmetic ------------------------------------------------------------

    def _check_same(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("matrix operand expected")
        if other.domain != self.domain:
            raise DimensionMismatch(f"domain {self.domain.spec} vs {other.domain.spec}")
        if other.shape != self.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return Matrix._raw(self.domain, self.domain.add_rows(self.rows, other.rows), self.n)

    def __sub__(self, other):
        self._check_same(other)
        return Matrix._raw(self.domain, self.domain.sub_rows(self.rows, other.rows), self.n)

    def __neg__(self):
        return self.map(self.domain.neg)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.domain is not self.domain and other.domain != self.domain:
            raise DimensionMismatch(f"domain {self.domain.spec} vs {other.domain.spec}")
        if self.n != other.m:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = [list(c) for c in zip(*other.rows)] if other.m else [[] for _ in range(other.n)]
        return Matrix._raw(self.domain, self.domain.matmul(self.rows, cols), other.n)

    def scale(self, c):
        return Matrix._raw(self.domain, self.domain.scale_rows(c, self.rows), self.n)

    def __pow__(self, k):
        if self.m != self.n:
            raise NotSquare("power of a non-square matrix")
        out = Matrix.identity(self.domain, self.n)
        for _ in range(k):
            out = out @ self
        return out


def mat_arith(op, a, b=None):
    """``add | sub | mul | scale | transpose | identity | zero`` dispatcher.

    ``identity`` takes ``(domain, n)``; ``zero`` takes ``(domain, (m, n))``.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a @ b
    if op == "scale":
        return a.scale(b)
    if op == "transpose":
        return a.transpose()
    if op == "identity":
        return Matrix.identity(a, b)
    if op == "zero":
        return Matrix.zeros(a, *b)
    raise ValueError(f"unknown operation {op!r}")


# determinants ---------------------------------------------------------------


def char_series(M):
    """``[1, d_1, ..., d_n]`` with ``det(I + Z*M) = sum d_k Z^k``."""
    if M.m != M.n:
        raise NotSquare(f"char_series needs a square matrix, got {M.shape}")
    return berkowitz(M.rows, M.domain)


def det(M):
    return char_series(M)[-1]


def _check_indices(idx, bound):
    idx = list(idx)
    if any(i < 1 or i > bound for i in idx) or any(a >= b for a, b in zip(idx, idx[1:])):
        raise BadIndexSet(f"index set {idx} not strictly increasing within 1..{bound}")
    return [i - 1 for i in idx]


def minor(A, alpha, beta):
    """Determinant of the submatrix on 1-based rows ``alpha``, columns ``beta``."""
    if len(alpha) != len(beta):
        raise BadIndexSet("row and column index sets differ in size")
    k = len(alpha)
    if k > min(A.m, A.n):
        return A.domain.zero
    rows = _check_indices(alpha, A.m)
    cols = _check_indices(beta, A.n)
    if k == 0:
        return A.domain.one
    return det(A.submatrix(rows, cols))


def adjugate(B):
    """Cotranspose of a square matrix, from Cayley-Hamilton.

    ``adj(B) = (-1)^(n-1) * sum_{j<n} (-1)^j d_j B^(n-1-j)`` evaluated by
    Horner's rule, where ``d`` is the characteristic series of ``B``.
    """
    if B.m != B.n:
        raise NotSquare(f"adjugate needs a square matrix, got {B.shape}")
    n = B.n
    dom = B.domain
    if n == 0:
        return Matrix(dom, [], 0)
    d = char_series(B)
    I = Matrix.identity(dom, n)
    acc = I
    for j in range(1, n):
        term = d[j] if j % 2 == 0 else dom.neg(d[j])
        acc = acc @ B + I.scale(term)
    return acc if (n - 1) % 2 == 0 else -acc


def _minors(A, k):
    for alpha in combinations(range(A.m), k):
        for beta in combinations(range(A.n), k):
            yield alpha, beta, det(A.submatrix(alpha, beta))


def determinantal_ideal_gens(A, k):
    """All order-``k`` minors, lexicographic in ``(alpha, beta)`` with ``alpha`` outer."""
    if k <= 0:
        return [A.domain.one]
    if k > min(A.m, A.n):
        return [A.domain.zero]
    return [mu for _, _, mu in _minors(A, k)]


def rank_at_most(A, k):
    """True iff every minor of order ``k + 1`` vanishes."""
    isz = A.domain.is_zero
    return all(isz(x) for x in determinantal_ideal_gens(A, k + 1))


def fitting_ideal_gens(G, k):
    """Generators of the ``k``-th Fitting ideal of the module presented by ``G``."""
    return determinantal_ideal_gens(G, G.m - k)


def is_sfio(ring, rs):
    """``rs`` is a fundamental system of orthogonal idempotents."""
    for i, a in enumerate(rs):
        if not ring.eq(ring.mul(a, a), a):
            return False
        for b in rs[i + 1:]:
            if not ring.eq_zero(ring.mul(a, b)):
                return False
    return ring.eq(ring.sum(rs), ring.one)


def rank_polynomial(P):
    """Coefficients ``r_0..r_m`` of ``det(I + (X - 1) P)`` for a projection ``P``.

    With ``d`` the characteristic series of ``P`` this is
    ``sum_j d_j (X - 1)^j``; no division is needed.
    """
    ring = P.domain
    if P.m != P.n:
        raise NotSquare("rank polynomial needs a square matrix")
    if P @ P != P:
        raise NotProjection("matrix is not idempotent")
    d = char_series(P)
    m = P.m
    r = []
    for i in range(m + 1):
        acc = ring.zero
        for j in range(i, m + 1):
            c = comb(j, i) * (-1) ** (j - i)
            acc = ring.add(acc, ring.mul(ring.from_int(c), d[j]))
        r.append(acc)
    if not is_sfio(ring, r):
        raise NotProjection("rank polynomial coefficients are not an orthogonal idempotent system")
    return r


def laurent_matrix_lift(A):
    """Constant embedding of ``A`` into ``A[t, 1/t]``."""
    dom = LaurentRing(A.domain)
    ring = A.domain
    return A.map(lambda x: LaurentPoly._term(ring, x, 0), domain=dom)


def laurent_coefficient_matrix(M, k):
    """Base-ring matrix of the ``t^k`` coefficients of a Laurent matrix."""
    return Matrix(M.domain.base, [[x.coefficient(k) for x in r] for r in M.rows], M.n)

