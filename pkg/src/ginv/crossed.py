"""Crossed linear maps and the generalized inverse they determine.

Two maps ``A: E -> F`` and ``Astar: F -> E`` between free modules are
crossed when ``Im A (+) Ker Astar = F`` and ``Ker A (+) Im Astar = E``.  Then
there is a unique generalized inverse ``psi`` of ``A`` whose projectors
run along ``Ker Astar`` and onto ``Im Astar``; everything here computes it
from the mixed Gram coefficients ``a_k = d_k(A Astar)`` with a single
inversion, then verifies the defining equalities.

The functions accept matrices over a ring or over Laurent polynomials.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .exceptions import DimensionMismatch, NotAGInverse
from .matrix import Matrix, adjugate, char_series, det, is_sfio
from .rings import retract

CROSSED_RANK = "crossed_rank"
CROSSED_WITH_SFIO = "crossed_with_sfio"
NOT_CROSSED = "not_crossed"


@dataclass
class CrossedDecision:
    status: str
    k: Optional[int] = None
    reason: Optional[str] = None
    theta: Optional[Matrix] = None
    psi: Optional[Matrix] = None
    psi_star: Optional[Matrix] = None
    sfio: list = field(default_factory=list)

    @property
    def crossed(self):
        return self.status != NOT_CROSSED


def _not_crossed(reason, **kw):
    return CrossedDecision(NOT_CROSSED, reason=reason, **kw)


def mixed_gram_coeffs(A, Astar):
    """``[a_1, ..., a_p]`` with ``det(I + Z A Astar) = 1 + sum a_k Z^k``, ``p = min(m, n)``.

    The series is taken on the smaller of ``A Astar`` and ``Astar A``; both
    agree up to degree ``p``.
    """
    if A.m != Astar.n or A.n != Astar.m:
        raise DimensionMismatch(f"{A.shape} and {Astar.shape} are not transposed shapes")
    prod = A @ Astar if A.m <= A.n else Astar @ A
    return char_series(prod)[1:]


def binet_cauchy_gram(A, Astar, k):
    """``a_k`` as ``sum det(Astar[beta, alpha]) * det(A[alpha, beta])``; reference route."""
    ring = A.domain
    if k == 0:
        return ring.one
    acc = ring.zero
    for alpha in combinations(range(A.m), k):
        for beta in combinations(range(A.n), k):
            acc = ring.add(
                acc, ring.mul(det(Astar.submatrix(beta, alpha)), det(A.submatrix(alpha, beta)))
            )
    return acc


def _gram(a, j):
    return a[j - 1]


def adj_k_horner(A, Astar, k, a=None):
    """``sum_{j=1..k} (-1)^(j-1) a_(k-j) Astar (A Astar)^(j-1)`` with ``a_0 = 1``.

    Evaluated as ``Astar @ H`` where ``H`` follows Horner's rule in
    ``A Astar``; costs ``k - 1`` products by ``A Astar``.
    """
    dom = A.domain
    if k <= 0:
        return Matrix.zeros(dom, A.n, A.m)
    if a is None:
        a = mixed_gram_coeffs(A, Astar)
    coeff = [dom.one] + list(a)
    # Astar (A Astar)^j == (Astar A)^j Astar: iterate on the smaller Gram matrix
    left = A.n < A.m
    G = Astar @ A if left else A @ Astar
    I = Matrix.identity(dom, G.m)
    # H = sum_{j=1..k} (-1)^(j-1) a_(k-j) G^(j-1)
    H = I if (k - 1) % 2 == 0 else -I
    for j in range(k - 1, 0, -1):
        c = coeff[k - j]
        if (j - 1) % 2:
            c = dom.neg(c)
        H = H @ G + I.scale(c)
    return H @ Astar if left else Astar @ H


def adj_k_minor_sum(A, Astar, k):
    """``sum det(Astar[beta, alpha]) * Adj_(alpha, beta)(A)`` over all ``k``-subsets."""
    dom = A.domain
    out = [[dom.zero] * A.m for _ in range(A.n)]
    if k <= 0:
        return Matrix(dom, out, A.m)
    for alpha in combinations(range(A.m), k):
        for beta in combinations(range(A.n), k):
            w = det(Astar.submatrix(beta, alpha))
            if dom.is_zero(w):
                continue
            adj = adjugate(A.submatrix(alpha, beta))
            for a_, bj in enumerate(beta):
                row = out[bj]
                for b_, ai in enumerate(alpha):
                    row[ai] = dom.add(row[ai], dom.mul(w, adj.rows[a_][b_]))
    return Matrix(dom, out, A.m)


def crossed_rank_k_decision(A, Astar, k, a=None):
    """Decide whether ``A`` and ``Astar`` are crossed of rank ``k``.

    On success ``psi = a_k^-1 theta`` is the generalized inverse of ``A``
    via ``Astar`` and ``psi_star`` the one of ``Astar`` via ``A``; the six
    equalities characterising a crossed pair are checked before returning.
    """
    ring = A.domain
    if a is None:
        a = mixed_gram_coeffs(A, Astar)
    for h in range(k + 1, len(a) + 1):
        if not ring.is_zero(_gram(a, h)):
            return _not_crossed(f"a_{h} is nonzero above rank {k}")
    if k > len(a):
        return _not_crossed(f"rank {k} exceeds min(m, n) = {len(a)}")
    a_k = ring.one if k == 0 else _gram(a, k)
    inv = ring.inverse(a_k)
    if inv is None:
        return _not_crossed(f"a_{k} is not invertible")
    theta = adj_k_horner(A, Astar, k, a)
    if A @ theta @ A != A.scale(a_k):
        return _not_crossed("A theta A != a_k A", theta=theta)
    if Astar @ A @ theta != Astar.scale(a_k):
        return _not_crossed("Astar A theta != a_k Astar", theta=theta)
    psi = theta.scale(inv)
    psi_star = adj_k_horner(Astar, A, k, a).scale(inv)
    failed = _six_equalities(A, Astar, psi, psi_star)
    if failed:
        return _not_crossed(failed, theta=theta)
    return CrossedDecision(CROSSED_RANK, k=k, theta=theta, psi=psi, psi_star=psi_star)


def _six_equalities(A, Astar, psi, psi_star):
    checks = [
        (A @ psi @ A == A, "A psi A != A"),
        (psi @ A @ psi == psi, "psi A psi != psi"),
        (Astar @ psi_star @ Astar == Astar, "Astar psi* Astar != Astar"),
        (psi_star @ Astar @ psi_star == psi_star, "psi* Astar psi* != psi*"),
        (A @ psi == psi_star @ Astar, "A psi != psi* Astar"),
        (psi @ A == Astar @ psi_star, "psi A != Astar psi*"),
    ]
    for ok, msg in checks:
        if not ok:
            return msg
    return None


def four_equalities(A, Astar, psi):
    """Names of the failed equalities characterising ``psi = Ig(A, Astar)``."""
    out = []
    if A @ psi @ A != A:
        out.append("A psi A = A")
    if psi @ A @ psi != psi:
        out.append("psi A psi = psi")
    if Astar @ A @ psi != Astar:
        out.append("Astar A psi = Astar")
    if psi @ A @ Astar != Astar:
        out.append("psi A Astar = Astar")
    return out


def self_crossed_decision(A, k):
    """``(pi, psi)`` if the endomorphism ``A`` is crossed with itself in rank ``k``, else ``None``.

    ``pi`` is the projection onto ``Im A`` along ``Ker A`` and ``psi`` the
    group inverse, both from the characteristic series ``d`` of ``A``::

        d_k pi  = d_(k-1) A - d_(k-2) A^2 + ... + (-1)^(k-1) A^k
        d_k psi = d_(k-1) pi - d_(k-2) A + ... + (-1)^(k-1) A^(k-1)
    """
    if A.m != A.n:
        raise DimensionMismatch("self-crossed test needs a square matrix")
    ring = A.domain
    n = A.n
    d = char_series(A)
    for h in range(k + 1, n + 1):
        if not ring.is_zero(d[h]):
            return None
    if k > n:
        return None
    inv = ring.inverse(d[k])
    if inv is None:
        return None
    I = Matrix.identity(ring, n)
    zero = Matrix.zeros(ring, n, n)
    pi_raw = zero
    power = I
    for j in range(1, k + 1):
        power = power @ A
        c = d[k - j] if j % 2 else ring.neg(d[k - j])
        pi_raw = pi_raw + power.scale(c)
    if pi_raw @ A != A.scale(d[k]) or pi_raw @ pi_raw != pi_raw.scale(d[k]):
        return None
    pi = pi_raw.scale(inv)
    if k == 0:
        psi = zero
    else:
        psi_raw = pi.scale(d[k - 1])
        power = I
        for j in range(1, k):
            power = power @ A
            c = d[k - 1 - j] if j % 2 == 0 else ring.neg(d[k - 1 - j])
            psi_raw = psi_raw + power.scale(c)
        psi = psi_raw.scale(inv)
    if A @ psi @ A != A or psi @ A @ psi != psi or A @ psi != psi @ A:
        return None
    return pi, psi


def projectors(A, psi):
    """``(A psi, psi A, I - psi A)`` for a generalized inverse ``psi`` of ``A``."""
    if A @ psi @ A != A or psi @ A @ psi != psi:
        raise NotAGInverse("psi is not a generalized inverse of A")
    dom = A.domain
    image = A @ psi
    coimage = psi @ A
    kernel = Matrix.identity(dom, A.n) - coimage
    for P in (image, coimage, kernel):
        if P @ P != P:
            raise NotAGInverse("projector is not idempotent")
    if not (A @ kernel).is_zero():
        raise NotAGInverse("kernel projector does not land in Ker A")
    return image, coimage, kernel


def sfio_from_gram(ring, a):
    """Split the ring along the Gram coefficients ``a = [a_1, ..., a_p]``.

    Walking down from ``a_p``: ``a_j = b_j a_j^2`` gives the idempotent
    ``r_j = a_j b_j``; the remaining coefficients are multiplied by
    ``1 - r_j`` before the next step.  Returns ``[r_0, ..., r_p]`` or
    ``None`` when some ``a_j`` does not divide its square.
    """
    work = list(a)
    p = len(work)
    r = [ring.zero] * (p + 1)
    for j in range(p, 0, -1):
        x = work[j - 1]
        b = ring.divide(x, ring.mul(x, x))
        if b is None:
            return None
        rj = ring.mul(x, b)
        if not ring.eq(ring.mul(rj, rj), rj):
            return None
        r[j] = rj
        keep = ring.sub(ring.one, rj)
        work = [ring.mul(keep, w) for w in work]
    r[0] = ring.sub(ring.one, ring.sum(r[1:]))
    if not is_sfio(ring, r):
        return None
    return r


def decide_crossed_general(A, Astar):
    """Crossedness without a constant rank, by splitting the ring.

    Each nonzero ``r_k`` of :func:`sfio_from_gram` gives a component ring
    ``r_k A`` in which the pair must be crossed of rank ``k``; the
    component inverses are summed back.
    """
    ring = A.domain
    a = mixed_gram_coeffs(A, Astar)
    r = sfio_from_gram(ring, a)
    if r is None:
        return _not_crossed("Gram coefficients do not split the ring")
    psi = Matrix.zeros(ring, A.n, A.m)
    psi_star = Matrix.zeros(ring, A.m, A.n)
    ranks = []
    for k, rk in enumerate(r):
        if ring.eq_zero(rk):
            continue
        sub = retract(ring, rk)
        Ak = A.map(lambda x: ring.mul(rk, x), domain=sub)
        Sk = Astar.map(lambda x: ring.mul(rk, x), domain=sub)
        dec = crossed_rank_k_decision(Ak, Sk, k)
        if not dec.crossed:
            return _not_crossed(f"component of rank {k}: {dec.reason}", sfio=r)
        psi = psi + Matrix(ring, dec.psi.rows, A.m)
        psi_star = psi_star + Matrix(ring, dec.psi_star.rows, A.n)
        ranks.append(k)
    failed = four_equalities(A, Astar, psi)
    if failed:
        return _not_crossed("glued inverse fails " + ", ".join(failed), sfio=r)
    if len(ranks) == 1 and ring.eq(r[ranks[0]], ring.one):
        return CrossedDecision(CROSSED_RANK, k=ranks[0], psi=psi, psi_star=psi_star, sfio=r)
    return CrossedDecision(CROSSED_WITH_SFIO, psi=psi, psi_star=psi_star, sfio=r)
