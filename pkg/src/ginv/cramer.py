"""Cramer identities in rank ``k`` and the generalized inverse they yield.

For ``A`` of rank at most ``k`` and any order-``k`` minor ``mu`` on rows
``alpha`` and columns ``beta``::

    mu * A == A @ adj_alpha_beta(A, alpha, beta) @ A

so a combination of minors equal to 1 gives a matrix ``B`` with
``A B A = A``.  This path enumerates every ``k``-minor and is exponential in
``k``; :mod:`ginv.nagata` is the polynomial-time route.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .exceptions import BadIndexSet
from .matrix import Matrix, _check_indices, adjugate, determinantal_ideal_gens, minor, rank_at_most


@dataclass
class MinorCombination:
    """Coefficients ``c[(alpha, beta)]`` (1-based index tuples) of a combination of ``k``-minors."""

    k: int
    coefficients: dict = field(default_factory=dict)
    ring: object = None

    def value(self, A):
        ring = A.domain
        return ring.sum(
            ring.mul(c, minor(A, alpha, beta)) for (alpha, beta), c in self.coefficients.items()
        )


def adj_alpha_beta(A, alpha, beta):
    """``n x m`` matrix carrying ``adj(A[alpha, beta])`` on rows ``beta``, columns ``alpha``."""
    if len(alpha) != len(beta):
        raise BadIndexSet("row and column index sets differ in size")
    rows = _check_indices(alpha, A.m)
    cols = _check_indices(beta, A.n)
    ring = A.domain
    out = [[ring.zero] * A.m for _ in range(A.n)]
    if not rows:
        return Matrix(ring, out, A.m)
    adj = adjugate(A.submatrix(rows, cols))
    for a, bj in enumerate(cols):
        for b, ai in enumerate(rows):
            out[bj][ai] = adj.rows[a][b]
    return Matrix(ring, out, A.m)


def cramer_identity_defect(A, V, alpha, beta):
    """``mu * V - A @ adj_alpha_beta(A) @ V``; zero when ``rank(A|V) <= k``."""
    mu = minor(A, alpha, beta)
    return V.scale(mu) - A @ (adj_alpha_beta(A, alpha, beta) @ V)


def ginverse_from_comaximal_minors(A, k):
    """``(B, cert)`` with ``ABA = A`` and ``BAB = B`` built from ``k``-minors, or ``None``.

    Requires every ``(k+1)``-minor to vanish and the ``k``-minors to be
    comaximal.  The raw combination is closed to ``B A B``.
    """
    ring = A.domain
    if k > min(A.m, A.n) or not rank_at_most(A, k):
        return None
    mus = determinantal_ideal_gens(A, k)
    cert = ring.one_in_ideal(mus)
    if cert is None:
        return None
    index = [
        (tuple(i + 1 for i in alpha), tuple(j + 1 for j in beta))
        for alpha in combinations(range(A.m), k)
        for beta in combinations(range(A.n), k)
    ] if k > 0 else [((), ())]
    combo = MinorCombination(
        k, {ab: c for ab, c in zip(index, cert) if not ring.eq_zero(c)}, ring
    )
    B = raw_cramer_inverse(A, combo)
    B = B @ A @ B
    if A @ B @ A != A or B @ A @ B != B:
        return None
    return B, combo


def raw_cramer_inverse(A, combo):
    """``sum c_(alpha,beta) * adj_alpha_beta(A)`` without the reflexive closure."""
    B = Matrix.zeros(A.domain, A.n, A.m)
    for (alpha, beta), c in combo.coefficients.items():
        B = B + adj_alpha_beta(A, alpha, beta).scale(c)
    return B


def prasad_robinson_check(cert):
    """True iff ``c[a,b] c[a',b'] == c[a,b'] c[a',b]`` for all index pairs.

    Without ``cert.ring`` the coefficients are compared as plain numbers.
    """
    coeffs = cert.coefficients
    ring = cert.ring
    alphas = sorted({a for a, _ in coeffs})
    betas = sorted({b for _, b in coeffs})
    zero = ring.zero if ring is not None else 0

    def c(a, b):
        return coeffs.get((a, b), zero)

    def same(x, y):
        return ring.eq(x, y) if ring is not None else x == y

    def mul(x, y):
        return ring.mul(x, y) if ring is not None else x * y

    for i, a in enumerate(alphas):
        for a2 in alphas[i:]:
            for j, b in enumerate(betas):
                for b2 in betas[j:]:
                    if not same(mul(c(a, b), c(a2, b2)), mul(c(a, b2), c(a2, b))):
                        return False
    return True
