import numpy as np
import pytest

from ginv import BudgetExceeded, DimensionMismatch, Matrix, UnsupportedRing, Z, make_ring
from ginv.oracle import (
    FiniteEnumeration,
    all_matrices,
    brute_force_ginverse,
    brute_force_ideal_equal,
    exhaustive_regularity,
    field_rank,
    matrix_at,
    verify_ginverse_pair,
)

from helpers import mat, rng


def test_brute_force_examples():
    assert brute_force_ginverse(mat("Zmod:4", [[2]])) is None
    assert brute_force_ginverse(mat("Zmod:6", [[3]])) == mat("Zmod:6", [[3]])
    A = mat("GF:2", [[1, 1], [0, 0]])
    B = brute_force_ginverse(A)
    assert A @ B @ A == A and B @ A @ B == B


def test_brute_force_returns_canonical_first_hit():
    R = make_ring("Zmod:6")
    A = mat(R, [[3]])
    # b = 1 is the first solution of 3 b 3 = 3; its closure is 1*3*1 = 3
    assert brute_force_ginverse(A) == A


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        brute_force_ginverse(mat("Zmod:6", [[1, 2], [3, 4]]), budget=100)
    with pytest.raises(UnsupportedRing):
        brute_force_ginverse(mat("Z", [[1]]))


def test_verify_examples():
    I = Matrix.identity(Z, 2)
    assert verify_ginverse_pair(I, I).all
    Z0 = Matrix.zeros(Z, 2, 2)
    assert verify_ginverse_pair(Z0, Z0).all
    assert verify_ginverse_pair(mat("Z", [[1, 1], [0, 0]]), mat("Z", [[1, 0], [0, 0]])).all
    bad = verify_ginverse_pair(I, I.scale(2))
    assert not bad.aba and not bad.all
    with pytest.raises(DimensionMismatch):
        verify_ginverse_pair(mat("Z", [[1, 2]]), mat("Z", [[1, 2]]))


def test_ideal_equality_examples():
    R6, R4 = make_ring("Zmod:6"), make_ring("Zmod:4")
    assert brute_force_ideal_equal([3], [9], R6)
    assert brute_force_ideal_equal([2], [4], R6)
    assert not brute_force_ideal_equal([2], [0], R4)


def test_enumeration_is_canonical():
    R = make_ring("retract(Zmod:6,3)")
    assert list(FiniteEnumeration.of(R)) == [0, 3]
    mats = list(all_matrices(make_ring("Zmod:3"), 1, 2))
    assert len(mats) == 9 and mats[1] == mat("Zmod:3", [[0, 1]])
    assert matrix_at(make_ring("Zmod:3"), 1, 2, 5) == mats[5]


@pytest.mark.parametrize("N", [2, 3, 4, 6])
@pytest.mark.parametrize("shape", [(1, 1), (1, 2), (2, 2)])
def test_regularity_table_matches_single_searches(N, shape):
    R = make_ring(f"Zmod:{N}")
    table = exhaustive_regularity(R, *shape)
    found = np.array([brute_force_ginverse(A) is not None for A in all_matrices(R, *shape)])
    assert (table == found).all()


def test_regularity_table_chinese_remainder_samples():
    R = make_ring("Zmod:6")
    table = exhaustive_regularity(R, 2, 3)
    r = rng(41)
    for _ in range(25):
        i = r.randrange(len(table))
        assert table[i] == (brute_force_ginverse(matrix_at(R, 2, 3, i)) is not None)


def test_field_rank():
    assert field_rank(mat("Q", [[1, 2], [2, 4]])) == 1
    assert field_rank(mat("GF:5", [[1, 2], [3, 1]])) == 1
    assert field_rank(Matrix(make_ring("Q"), [], 3)) == 0
    with pytest.raises(UnsupportedRing):
        field_rank(mat("Z", [[1]]))
