import random

from hypothesis import strategies as st

from ginv import Matrix, make_ring

SMALL_RINGS = ["Z", "Zmod:6", "Zmod:4", "GF:5"]


def mat(ring, rows):
    return Matrix.from_values(make_ring(ring), rows)


def random_matrix(rng, ring, m, n, lo=-5, hi=5):
    R = make_ring(ring)
    return Matrix.from_values(R, [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)], n)


def random_low_rank(rng, ring, m, n, k, lo=-3, hi=3):
    """Product of an ``m x k`` and a ``k x n`` random matrix."""
    return random_matrix(rng, ring, m, k, lo, hi) @ random_matrix(rng, ring, k, n, lo, hi)


@st.composite
def int_matrices(draw, ring="Z", max_rows=3, max_cols=3, lo=-5, hi=5, min_dim=1):
    m = draw(st.integers(min_dim, max_rows))
    n = draw(st.integers(min_dim, max_cols))
    vals = draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m))
    return Matrix.from_values(make_ring(ring), vals, n)


def rng(seed=0):
    return random.Random(seed)
