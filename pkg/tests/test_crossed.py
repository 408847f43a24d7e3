from fractions import Fraction

import pytest

from ginv import Matrix, NotAGInverse, Q, Z, make_ring
from ginv.crossed import (
    CROSSED_RANK,
    NOT_CROSSED,
    adj_k_horner,
    adj_k_minor_sum,
    binet_cauchy_gram,
    crossed_rank_k_decision,
    decide_crossed_general,
    four_equalities,
    mixed_gram_coeffs,
    projectors,
    self_crossed_decision,
    sfio_from_gram,
)
from ginv.matrix import determinantal_ideal_gens, is_sfio

from helpers import mat, random_low_rank, random_matrix, rng


def test_mixed_gram_examples():
    I2 = Matrix.identity(Z, 2)
    assert mixed_gram_coeffs(I2, I2) == [2, 1]
    assert mixed_gram_coeffs(mat("Z", [[1, 2]]), mat("Z", [[1], [0]])) == [1]
    A = mat("Z", [[1, 1], [0, 0]])
    assert mixed_gram_coeffs(A, A.T) == [2, 0]


def test_binet_cauchy_agreement():
    r = rng(21)
    for _ in range(40):
        m, n = r.randint(1, 3), r.randint(1, 3)
        ring = r.choice(["Z", "Zmod:2", "Zmod:3"])
        A = random_matrix(r, ring, m, n)
        S = random_matrix(r, ring, n, m)
        a = mixed_gram_coeffs(A, S)
        assert a == [binet_cauchy_gram(A, S, k) for k in range(1, min(m, n) + 1)]


def test_adj_k_examples():
    I2 = Matrix.identity(Z, 2)
    S = mat("Z", [[1, 4], [2, 0], [3, 1]])
    A = mat("Z", [[1, 0, 2], [0, 1, 1]])
    assert adj_k_horner(A, S, 1) == S
    assert adj_k_horner(I2, I2, 2) == I2
    assert adj_k_horner(mat("Z", [[1, 1], [0, 0]]), mat("Z", [[1, 0], [0, 0]]), 1) == mat("Z", [[1, 0], [0, 0]])
    assert adj_k_minor_sum(A, S, 1) == S
    assert adj_k_minor_sum(I2, I2, 2) == I2
    assert adj_k_minor_sum(Matrix.zeros(Z, 2, 3), S, 1) == S


def test_horner_equals_minor_sum():
    r = rng(22)
    for _ in range(60):
        m, n = r.randint(1, 4), r.randint(1, 4)
        ring = r.choice(["Z", "Zmod:6"])
        A, S = random_matrix(r, ring, m, n), random_matrix(r, ring, n, m)
        for k in range(1, min(3, m, n) + 1):
            assert adj_k_horner(A, S, k) == adj_k_minor_sum(A, S, k)


def test_rank_k_sandwich_identity():
    r = rng(23)
    for _ in range(40):
        m, n = r.randint(1, 4), r.randint(1, 4)
        k = r.randint(1, min(m, n))
        A = random_low_rank(r, "Z", m, n, k)
        S = random_matrix(r, "Z", n, m)
        a = mixed_gram_coeffs(A, S)
        assert A @ adj_k_horner(A, S, k) @ A == A.scale(a[k - 1])


def test_sandwich_defect_lies_in_next_determinantal_ideal():
    r = rng(24)
    for _ in range(25):
        m, n = r.randint(1, 3), r.randint(1, 3)
        k = r.randint(1, min(m, n))
        A, S = random_matrix(r, "Z", m, n, -3, 3), random_matrix(r, "Z", n, m, -3, 3)
        a = mixed_gram_coeffs(A, S)
        defect = A @ adj_k_horner(A, S, k) @ A - A.scale(a[k - 1])
        gens = determinantal_ideal_gens(A, k + 1)
        for x in (x for row in defect.rows for x in row):
            assert Z.ideal_membership(x, gens) is not None


def test_rank_k_decision_examples():
    for n in (1, 2, 3):
        I = Matrix.identity(Z, n)
        dec = crossed_rank_k_decision(I, I, n)
        assert dec.status == CROSSED_RANK and dec.psi == I
    dec = crossed_rank_k_decision(mat("Z", [[2]]), mat("Z", [[2]]), 1)
    assert dec.status == NOT_CROSSED and "a_1" in dec.reason
    dec = crossed_rank_k_decision(mat("Q", [[2]]), mat("Q", [[2]]), 1)
    assert dec.status == CROSSED_RANK and dec.psi == Matrix.from_values(Q, [[Fraction(1, 2)]])


def test_rank_k_decision_is_symmetric_and_certified():
    r = rng(25)
    for _ in range(40):
        m, n = r.randint(1, 3), r.randint(1, 3)
        ring = r.choice(["Q", "GF:5", "Zmod:6"])
        A, S = random_matrix(r, ring, m, n, -2, 2), random_matrix(r, ring, n, m, -2, 2)
        for k in range(0, min(m, n) + 1):
            d1 = crossed_rank_k_decision(A, S, k)
            d2 = crossed_rank_k_decision(S, A, k)
            assert d1.status == d2.status
            if d1.crossed:
                assert four_equalities(A, S, d1.psi) == []
                assert d1.psi @ A @ d1.psi == d1.psi


def test_self_crossed_examples():
    D = mat("Z", [[1, 0], [0, 0]])
    pi, psi = self_crossed_decision(D, 1)
    assert pi == D and psi == D
    I = Matrix.identity(Z, 3)
    assert self_crossed_decision(I, 3) == (I, I)
    assert self_crossed_decision(mat("Z", [[0, 1], [0, 0]]), 1) is None


def test_self_crossed_group_inverse():
    A = mat("Q", [[2, 0, 0], [0, 3, 0], [0, 0, 0]])
    pi, psi = self_crossed_decision(A, 2)
    assert A @ psi @ A == A and psi @ A @ psi == psi and A @ psi == psi @ A
    assert pi @ pi == pi and pi @ A == A


def test_projectors_examples():
    I = Matrix.identity(Z, 2)
    assert projectors(I, I) == (I, I, Matrix.zeros(Z, 2, 2))
    A, psi = mat("Z", [[1, 1], [0, 0]]), mat("Z", [[1, 0], [0, 0]])
    img, coimg, ker = projectors(A, psi)
    assert img == mat("Z", [[1, 0], [0, 0]])
    assert coimg == mat("Z", [[1, 1], [0, 0]])
    assert ker == mat("Z", [[0, -1], [0, 1]])
    assert (A @ ker).is_zero()
    Z0 = Matrix.zeros(Z, 2, 3)
    assert projectors(Z0, Z0.T) == (Matrix.zeros(Z, 2, 2), Matrix.zeros(Z, 3, 3), Matrix.identity(Z, 3))
    with pytest.raises(NotAGInverse):
        projectors(mat("Z", [[1]]), mat("Z", [[2]]))


def test_sfio_from_gram_examples():
    R6 = make_ring("Zmod:6")
    assert sfio_from_gram(R6, [3]) == [4, 3]
    assert sfio_from_gram(Q, [Fraction(3), Fraction(5)]) == [0, 0, 1]
    assert sfio_from_gram(Z, [2]) is None


def test_decide_general_examples():
    R6 = make_ring("Zmod:6")
    dec = decide_crossed_general(mat(R6, [[3]]), mat(R6, [[3]]))
    assert dec.crossed and dec.sfio == [4, 3] and dec.psi == mat(R6, [[3]])
    I = Matrix.identity(Q, 2)
    dec = decide_crossed_general(I, I)
    assert dec.status == CROSSED_RANK and dec.k == 2
    R4 = make_ring("Zmod:4")
    assert decide_crossed_general(mat(R4, [[2]]), mat(R4, [[2]])).status == NOT_CROSSED


def test_decide_general_random():
    r = rng(26)
    for _ in range(40):
        ring = r.choice(["Zmod:6", "Zmod:12", "Zmod:4", "GF:3"])
        m, n = r.randint(1, 3), r.randint(1, 3)
        A = random_matrix(r, ring, m, n, 0, 11)
        S = A.T
        dec = decide_crossed_general(A, S)
        if dec.crossed:
            assert four_equalities(A, S, dec.psi) == []
            assert is_sfio(A.domain, dec.sfio)
