"""Brute-force ground truth over small finite rings.

Everything here is deliberately independent of the determinantal machinery:
candidates are enumerated and checked by plain matrix products, vectorised
with numpy.  All finite rings of the package are residue rings ``Z/n`` (or
retracts of them), so entries are integers reduced modulo the base modulus.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .exceptions import BudgetExceeded, DimensionMismatch, UnsupportedRing
from .matrix import Matrix
from .rings import IdempotentRetract, ModularRing, make_ring

DEFAULT_BUDGET = 10**7
_CHUNK = 1 << 15


@dataclass
class FiniteEnumeration:
    """The carrier of a finite ring in canonical order."""

    ring: object
    elements: list

    @classmethod
    def of(cls, ring):
        if not getattr(ring, "is_finite", False):
            raise UnsupportedRing(f"{ring.spec} is not finite")
        return cls(ring, list(ring.elements()))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _modulus(ring):
    base = ring.base if isinstance(ring, IdempotentRetract) else ring
    if not isinstance(base, ModularRing):
        raise UnsupportedRing(f"{ring.spec} is not a residue ring")
    return base.n


def _digits(idx, q, length):
    """Base-``q`` digits of ``idx``, most significant first."""
    out = np.empty((len(idx), length), dtype=np.int64)
    rest = idx.copy()
    for pos in range(length - 1, -1, -1):
        out[:, pos] = rest % q
        rest //= q
    return out


def brute_force_ginverse(A, budget=DEFAULT_BUDGET):
    """First ``B`` (row-major, canonical carrier order) with ``ABA = A``, closed to ``BAB``.

    Returns ``None`` when no candidate works.
    """
    ring = A.domain
    elems = np.array(FiniteEnumeration.of(ring).elements, dtype=np.int64)
    N = _modulus(ring)
    m, n = A.shape
    q = len(elems)
    size = q ** (n * m)
    if size > budget:
        raise BudgetExceeded(f"{q}^{n * m} = {size} candidates exceed the budget {budget}")
    a = np.array(A.rows, dtype=np.int64).reshape(m, n)
    for start in range(0, size, _CHUNK):
        idx = np.arange(start, min(size, start + _CHUNK), dtype=np.int64)
        Bs = elems[_digits(idx, q, n * m)].reshape(-1, n, m)
        ABA = (a @ Bs % N) @ a % N
        hits = np.flatnonzero(np.all(ABA == a, axis=(1, 2)))
        if hits.size:
            B = Matrix(ring, Bs[hits[0]].tolist(), m)
            return B @ A @ B
    return None


def exhaustive_regularity(ring, m, n):
    """Boolean array: entry ``i`` tells whether the ``i``-th ``m x n`` matrix has a ``B`` with ``ABA = A``.

    Matrices are numbered like candidates in :func:`brute_force_ginverse`.
    Over ``Z/n`` with ``n = a*b`` coprime, a matrix has a generalized inverse
    iff both of its reductions do (Chinese remainders), so composite moduli
    are assembled from their prime-power factors.
    """
    ring = make_ring(ring)
    if not isinstance(ring, ModularRing):
        raise UnsupportedRing("exhaustive tables need a residue ring")
    N = ring.n
    factors = _prime_power_factors(N)
    if len(factors) <= 1:
        return _regularity_table(N, m, n)
    count = N ** (m * n)
    digits = _digits(np.arange(count, dtype=np.int64), N, m * n)
    ok = np.ones(count, dtype=bool)
    for f in factors:
        table = _regularity_table(f, m, n)
        weights = f ** np.arange(m * n - 1, -1, -1, dtype=np.int64)
        ok &= table[(digits % f) @ weights]
    return ok


def _prime_power_factors(N):
    out = []
    p = 2
    while p * p <= N:
        if N % p == 0:
            f = 1
            while N % p == 0:
                N //= p
                f *= p
            out.append(f)
        p += 1
    if N > 1:
        out.append(N)
    return out


def _regularity_table(N, m, n):
    count = N ** (m * n)
    As = _digits(np.arange(count, dtype=np.int64), N, m * n).reshape(-1, m, n)
    Bs = _digits(np.arange(N ** (n * m), dtype=np.int64), N, n * m).reshape(-1, n, m)
    ok = np.zeros(count, dtype=bool)
    pending = np.arange(count)
    start = 0
    while start < len(Bs) and pending.size:
        step = max(1, (_CHUNK * 8) // pending.size)
        chunk = Bs[start:start + step]
        start += step
        sub = As[pending][:, None]
        ABA = (sub @ chunk[None] % N) @ sub % N
        hit = np.all(ABA == sub, axis=(2, 3)).any(axis=1)
        ok[pending[hit]] = True
        pending = pending[~hit]
    return ok


def matrix_at(ring, m, n, index):
    """The ``index``-th ``m x n`` matrix in canonical order."""
    elems = FiniteEnumeration.of(ring).elements
    q = len(elems)
    vals = _digits(np.array([index], dtype=np.int64), q, m * n)[0]
    return Matrix(ring, [[elems[v] for v in vals[i * n:(i + 1) * n]] for i in range(m)], n)


def all_matrices(ring, m, n):
    """Every ``m x n`` matrix over a finite ring, in canonical order."""
    elems = FiniteEnumeration.of(ring).elements
    for vals in product(elems, repeat=m * n):
        yield Matrix(ring, [list(vals[i * n:(i + 1) * n]) for i in range(m)], n)


@dataclass
class PairCheck:
    aba: bool
    bab: bool
    ab_idempotent: bool
    ba_idempotent: bool

    @property
    def all(self):
        return self.aba and self.bab and self.ab_idempotent and self.ba_idempotent

    def as_dict(self):
        return {
            "ABA=A": self.aba,
            "BAB=B": self.bab,
            "(AB)^2=AB": self.ab_idempotent,
            "(BA)^2=BA": self.ba_idempotent,
        }


def verify_ginverse_pair(A, B):
    """Check ``ABA = A``, ``BAB = B`` and idempotency of ``AB`` and ``BA``."""
    if B.shape != (A.n, A.m):
        raise DimensionMismatch(f"B must be {A.n}x{A.m}, got {B.m}x{B.n}")
    AB = A @ B
    BA = B @ A
    return PairCheck(AB @ A == A, BA @ B == B, AB @ AB == AB, BA @ BA == BA)


def ideal_set(ring, gens):
    """The ideal generated by ``gens`` as a set of elements."""
    elems = FiniteEnumeration.of(ring).elements
    out = {ring.zero}
    for g in gens:
        multiples = {ring.mul(c, g) for c in elems}
        out = {ring.add(x, y) for x in out for y in multiples}
    return out


def brute_force_ideal_equal(gens1, gens2, ring):
    """Whether two generator lists give the same ideal, by enumeration."""
    return ideal_set(ring, gens1) == ideal_set(ring, gens2)


def field_rank(A):
    """Rank over ``Q`` or ``GF(p)`` by elimination (sympy), as an independent check."""
    from sympy import GF, QQ
    from sympy.polys.matrices import DomainMatrix

    ring = A.domain
    if ring.spec == "Q":
        dom = QQ
    elif ring.is_field and ring.spec.startswith("GF:"):
        dom = GF(ring.n)
    else:
        raise UnsupportedRing(f"{ring.spec} is not a field")
    if A.m == 0 or A.n == 0:
        return 0
    rows = [[dom(x) if dom is not QQ else QQ(x.numerator, x.denominator) for x in r] for r in A.rows]
    return DomainMatrix(rows, A.shape, dom).rank()
