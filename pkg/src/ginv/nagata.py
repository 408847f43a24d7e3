"""Generalized inverses over a strongly discrete ring through Laurent polynomials.

The working matrix is the ``t``-weighted conjugate ``A∘`` with entries
``t^(j-i) * A[j, i]``.  The characteristic series of ``A A∘`` gives the Gram
polynomials ``g_k(t)``; their coefficients generate the Gram ideals, whose
idempotent generators split the ring into pieces where ``A`` has constant
rank.  On each piece a single ideal membership (primitivity of the top Gram
polynomial) turns the Laurent inverse ``B(t)`` into one over the base ring.
"""

from dataclasses import dataclass, field
from typing import Optional

from .counting import OpCounts, count_ops
from .crossed import adj_k_horner
from .exceptions import CertificateInvalid, UnsupportedRing
from .laurent import LaurentPoly, LaurentRing
from .matrix import (
    Matrix,
    char_series,
    is_sfio,
    laurent_coefficient_matrix,
    laurent_matrix_lift,
    rank_polynomial,
)
from .rings import idempotent_generator_of_ideal, retract

FOUND = "found"
NOT_LOCALLY_SIMPLE = "not_locally_simple"


def a_circ(A):
    """The ``n x m`` Laurent matrix with entry ``(i, j)`` equal to ``t^(j-i) * A[j, i]``."""
    ring = A.domain
    rows = A.rows
    out = [
        [LaurentPoly._term(ring, rows[j][i], j - i) for j in range(A.m)]
        for i in range(A.n)
    ]
    return Matrix(LaurentRing(ring), out, A.m)


def laurent_conjugate(M):
    """``M∘`` for a matrix already over Laurent polynomials."""
    rows = M.rows
    out = [[rows[j][i].shift(j - i) for j in range(M.m)] for i in range(M.n)]
    return Matrix(M.domain, out, M.m)


@dataclass
class GramData:
    """Gram polynomials of an ``m x n`` matrix and their shifted coefficient table.

    ``table[k][l]`` is the coefficient of ``t^(l - k(n-k))`` in ``g[k]``, for
    ``l`` in ``0..k(m+n-2k)``.  Index 0 holds the constant 1.
    """

    m: int
    n: int
    g: list
    table: list

    @property
    def p(self):
        return len(self.g) - 1

    def shift(self, k):
        return k * (self.n - k)

    def top_rank(self):
        """Largest ``k`` with ``g_k != 0``; 0 when every Gram polynomial vanishes."""
        for k in range(self.p, 0, -1):
            if not self.g[k].is_zero():
                return k
        return 0

    def ideal_gens(self, k):
        """Generators of the Gram ideal of level ``k``: every ``g_(h,l)`` with ``h >= k``."""
        return [c for h in range(max(k, 0), self.p + 1) for c in self.table[h]]

    def project(self, ring, e):
        """The same data multiplied by the idempotent ``e``, over ``ring = e*A``."""
        base_mul = ring.base.mul if hasattr(ring, "base") else ring.mul
        g = [LaurentPoly(ring, x.val, [base_mul(e, c) for c in x.coeffs]) for x in self.g]
        table = [[base_mul(e, c) for c in row] for row in self.table]
        g[0] = LaurentPoly.constant(ring, ring.one)
        table[0] = [ring.one]
        return GramData(self.m, self.n, g, table)


def gram_data(A):
    """Gram polynomials ``g_k = d_k(A A∘)`` with their shifted coefficient table.

    The series is computed on ``A A∘`` when ``m <= n`` and on ``A∘ A``
    otherwise; the two agree up to degree ``min(m, n)``.
    """
    m, n = A.shape
    ring = A.domain
    Ac = a_circ(A)
    AL = laurent_matrix_lift(A)
    prod = AL @ Ac if m <= n else Ac @ AL
    d = char_series(prod)
    p = min(m, n)
    g = d[: p + 1]
    table = [[ring.one]]
    for k in range(1, p + 1):
        lo = -k * (n - k)
        width = k * (m + n - 2 * k) + 1
        gk = g[k]
        if not gk.is_zero() and (gk.val < lo or gk.top > k * (m - k)):
            raise CertificateInvalid(f"g_{k} has exponents outside [{lo}, {k * (m - k)}]")
        table.append([gk.coefficient(lo + l) for l in range(width)])
    return GramData(m, n, g, table)


@dataclass
class PipelineResult:
    """Outcome of the constant-rank pipeline; ``reason`` is set on refutation."""

    k: int
    g_k: Optional[LaurentPoly] = None
    B_t: Optional[Matrix] = None
    cert: Optional[list] = None
    reason: Optional[str] = None

    @property
    def ok(self):
        return self.reason is None


def rank_constant_pipeline(A, gram=None):
    """Laurent inverse ``B(t)`` with ``A B(t) A = g_k(t) A`` plus a primitivity certificate.

    Refutes when the top Gram polynomial, shifted to a polynomial, is not
    primitive, or when the Laurent identity fails (then a minor of order
    ``k + 1`` is nonzero).
    """
    ring = A.domain
    m, n = A.shape
    if gram is None:
        gram = gram_data(A)
    k = gram.top_rank()
    dom = LaurentRing(ring)
    if k == 0:
        zero = Matrix.zeros(dom, n, m)
        if not A.is_zero():
            return PipelineResult(0, gram.g[0], zero, None, "Gram polynomials vanish on a nonzero matrix")
        return PipelineResult(0, gram.g[0], zero, [ring.one])
    g_k = gram.g[k]
    cert = ring.one_in_ideal(gram.table[k])
    if cert is None:
        return PipelineResult(k, g_k, None, None, f"t^{gram.shift(k)} g_{k}(t) is not primitive")
    B_t = adj_k_horner(laurent_matrix_lift(A), a_circ(A), k, gram.g[1:])
    if not laurent_sandwich_holds(A, B_t, g_k):
        return PipelineResult(k, g_k, B_t, cert, f"A B(t) A != g_{k}(t) A: a minor of order {k + 1} is nonzero")
    return PipelineResult(k, g_k, B_t, cert)


def laurent_sandwich_holds(A, B_t, g):
    """Exact test of ``A B(t) A == g(t) A`` for a constant matrix ``A``.

    Since ``A`` does not involve ``t`` the identity splits by exponent into
    ``A B_e A == g_e A`` for the coefficient matrices ``B_e`` of ``B(t)``.
    """
    exps = {e for row in B_t.rows for x in row for e, _ in x.terms()}
    exps.update(e for e, _ in g.terms())
    for e in sorted(exps):
        Be = laurent_coefficient_matrix(B_t, e)
        if A @ Be @ A != A.scale(g.coefficient(e)):
            return False
    return True


def extract_base_ginverse(A, B_t, g_k, cert, k):
    """Base-ring generalized inverse from ``B(t)`` and a primitivity certificate of ``g_k``.

    Comparing coefficients in ``A B(t) A = g_k(t) A`` gives
    ``A B_l A = g_(k,l) A`` for each slice ``B_l``; the certified combination
    of slices satisfies ``A B' A = A`` and is closed to ``B' A B'``.
    """
    ring = A.domain
    s = k * (A.n - k)
    terms = [(l - s, c) for l, c in enumerate(cert) if not ring.eq_zero(c)]
    exps = [e for e, _ in terms]
    cs = [c for _, c in terms]
    Bp = Matrix(
        ring, [[ring.dot(cs, [x.coefficient(e) for e in exps]) for x in row] for row in B_t.rows], A.m
    )
    B = Bp @ A @ Bp
    if A @ B @ A != A or B @ A @ B != B:
        raise CertificateInvalid("extracted matrix is not a generalized inverse")
    return B


@dataclass
class GInverseReport:
    status: str
    ring: object
    reason: Optional[str] = None
    rank_profile: list = field(default_factory=list)
    B: Optional[Matrix] = None
    proj_image: Optional[Matrix] = None
    proj_coimage: Optional[Matrix] = None
    proj_kernel: Optional[Matrix] = None
    op_counts: OpCounts = field(default_factory=OpCounts)

    @property
    def found(self):
        return self.status == FOUND

    @property
    def constant_rank(self):
        """The rank when a single component carries the whole ring, else ``None``."""
        ring = self.ring
        ranks = [k for r, k in self.rank_profile if not ring.eq_zero(r)]
        if len(ranks) == 1:
            return ranks[0]
        return None


def _component(ring, A, gram, r):
    R = retract(ring, r)
    if R is ring:
        return R, A, gram
    Ar = Matrix(R, [[ring.mul(r, x) for x in row] for row in A.rows], A.n)
    return R, Ar, gram.project(R, r)


def _refuted(ring, reason, profile, counts):
    return GInverseReport(NOT_LOCALLY_SIMPLE, ring, reason=reason, rank_profile=profile, op_counts=counts)


def general_ginverse(A):
    """Decide whether ``A`` has a generalized inverse, and build one if so."""
    ring = A.domain
    with count_ops() as counts:
        report = _general(A, ring)
    report.op_counts = counts
    return report


def _general(A, ring):
    m, n = A.shape
    gram = gram_data(A)
    p = gram.p
    e = [None] * (p + 2)
    e[p + 1] = ring.zero
    for k in range(p, 0, -1):
        try:
            ek = idempotent_generator_of_ideal(ring, gram.ideal_gens(k))
        except NotImplementedError as exc:
            raise UnsupportedRing(f"{ring.spec} has no ideal membership test") from exc
        if ek is None:
            return _refuted(ring, f"Gram ideal of level {k} is not idempotent", [], None)
        e[k] = ek
    e[0] = ring.one
    r = [ring.sub(e[k], e[k + 1]) for k in range(p + 1)]
    if not is_sfio(ring, r):
        raise CertificateInvalid("Gram idempotents do not split the ring")
    profile = list(zip(r, range(p + 1)))

    B = Matrix.zeros(ring, n, m)
    for k, rk in enumerate(r):
        if ring.eq_zero(rk):
            continue
        R, Ak, gk = _component(ring, A, gram, rk)
        res = rank_constant_pipeline(Ak, gk)
        if not res.ok:
            return _refuted(ring, f"component of rank {k}: {res.reason}", profile, None)
        if res.k != k:
            raise CertificateInvalid(f"component {ring.format_element(rk)} has rank {res.k}, expected {k}")
        if k == 0:
            continue
        Bk = extract_base_ginverse(Ak, res.B_t, res.g_k, res.cert, k)
        B = B + Matrix(ring, Bk.rows, m)

    AB = A @ B
    BA = B @ A
    if AB @ A != A or BA @ B != B or AB @ AB != AB or BA @ BA != BA:
        raise CertificateInvalid("glued matrix is not a generalized inverse")
    kernel = Matrix.identity(ring, n) - BA
    return GInverseReport(
        FOUND, ring, rank_profile=profile, B=B, proj_image=AB, proj_coimage=BA, proj_kernel=kernel
    )


@dataclass
class ProjectivityReport:
    projective: bool
    reason: Optional[str] = None
    P: Optional[Matrix] = None
    rank_polynomial: Optional[list] = None
    ginverse: Optional[GInverseReport] = None


def projectivity_certificate(G):
    """Decide whether the module presented by ``G`` (``m`` generators) is projective.

    When ``G`` has a generalized inverse ``B`` the image of ``G`` is a direct
    summand and ``P = I - G B`` projects onto a complement isomorphic to the
    cokernel.
    """
    report = general_ginverse(G)
    if not report.found:
        return ProjectivityReport(False, reason=report.reason, ginverse=report)
    P = Matrix.identity(G.domain, G.m) - report.proj_image
    return ProjectivityReport(True, P=P, rank_polynomial=rank_polynomial(P), ginverse=report)
