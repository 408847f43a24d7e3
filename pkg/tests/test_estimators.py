import numpy as np
import pytest
from sklearn.base import clone

from ginv import DimensionMismatch, Matrix, NotLocallySimpleError, ParseError, make_ring
from ginv.estimators import GeneralizedInverse, ProjectivityTest
from ginv.validation import check_matrix


def test_fit_transform():
    est = GeneralizedInverse(ring="Z").fit([[1, 1], [0, 0]])
    R = make_ring("Z")
    assert est.B_ == Matrix.from_values(R, [[1, 0], [0, 0]])
    assert est.proj_kernel_ == Matrix.from_values(R, [[0, -1], [0, 1]])
    X = est.transform([[3], [0]])
    assert est.inverse_transform(X) == Matrix.from_values(R, [[3], [0]])
    assert est.solve([[3], [0]]) is not None
    assert est.solve([[0], [1]]) is None


def test_params_and_clone():
    est = GeneralizedInverse(ring="Zmod:6", strict=False)
    assert est.get_params() == {"ring": "Zmod:6", "strict": False}
    other = clone(est).set_params(ring="Q")
    assert other.ring == "Q" and est.ring == "Zmod:6"


def test_strict_refusal():
    with pytest.raises(NotLocallySimpleError) as info:
        GeneralizedInverse(ring="Zmod:4").fit([[2]])
    assert info.value.report is not None
    est = GeneralizedInverse(ring="Zmod:4", strict=False).fit([[2]])
    assert est.B_ is None
    with pytest.raises(NotLocallySimpleError):
        est.transform([[1]])


def test_unfitted_and_bad_input():
    with pytest.raises(AttributeError):
        GeneralizedInverse().transform([[1]])
    with pytest.raises(ParseError):
        GeneralizedInverse().fit([[1.5]])
    with pytest.raises(DimensionMismatch):
        GeneralizedInverse().fit([[1, 2], [3]])
    est = GeneralizedInverse().fit([[1, 2]])
    with pytest.raises(DimensionMismatch):
        est.transform([[1], [2]])


def test_numpy_and_string_input():
    A = check_matrix(np.array([[1, 2], [3, 4]]), "Zmod:5")
    assert A.rows == [[1, 2], [3, 4]]
    assert check_matrix([["1/2", "3"]], "Q").rows[0][0].denominator == 2


def test_projectivity_estimator():
    est = ProjectivityTest(ring="Zmod:6").fit([[2]])
    assert est.projective_ and est.rank_polynomial_ == [4, 3]
    assert not ProjectivityTest(ring="Z").fit([[2]]).projective_
