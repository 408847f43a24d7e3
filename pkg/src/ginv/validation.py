"""Input checks shared by the estimator layer."""

from fractions import Fraction

from .exceptions import DimensionMismatch, ParseError
from .matrix import Matrix
from .rings import make_ring


def check_ring(ring):
    """Ring descriptor from a spec string or an existing ring."""
    if ring is None:
        raise ParseError("a ring is required")
    return make_ring(ring)


def check_matrix(X, ring=None, name="matrix"):
    """Coerce ``X`` into a :class:`Matrix` over ``ring``.

    ``X`` may already be a matrix (its ring must then agree), a nested list,
    or anything with ``tolist()`` such as a numpy integer array.  Entries may
    be ints, Fractions or decimal strings.
    """
    if isinstance(X, Matrix):
        if ring is not None and X.domain != check_ring(ring):
            raise DimensionMismatch(f"{name} is over {X.domain.spec}, expected {make_ring(ring).spec}")
        return X
    R = check_ring(ring)
    if hasattr(X, "tolist"):
        X = X.tolist()
    if not isinstance(X, (list, tuple)):
        raise ParseError(f"{name} must be a nested list of entries")
    rows = [list(r) for r in X]
    ncols = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch(f"{name} has ragged rows")
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, Fraction, str)):
                raise ParseError(f"{name} entry {x!r} is not an exact scalar")
    return Matrix.from_values(R, rows, ncols)


def check_conformable(A, V, name="V"):
    if V.m != A.n:
        raise DimensionMismatch(f"{name} needs {A.n} rows, got {V.m}")
    if V.domain != A.domain:
        raise DimensionMismatch(f"{name} is over {V.domain.spec}, expected {A.domain.spec}")
