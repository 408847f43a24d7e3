"""Estimator wrappers with the familiar ``fit`` / ``transform`` interface.

``GeneralizedInverse(ring="Zmod:6").fit(A)`` runs the full decision
procedure on ``A``; afterwards ``transform(V)`` returns ``B @ V``, a solution
of ``A X = V`` whenever one exists.
"""

from sklearn.base import BaseEstimator, TransformerMixin

from .exceptions import DimensionMismatch, NotLocallySimpleError
from .nagata import general_ginverse, projectivity_certificate
from .validation import check_conformable, check_matrix


def _check_fitted(est, attr):
    if not hasattr(est, attr):
        raise AttributeError(f"{type(est).__name__} is not fitted yet; call fit first")


class GeneralizedInverse(TransformerMixin, BaseEstimator):
    """Generalized inverse ``B`` of a matrix ``A`` (``ABA = A``, ``BAB = B``).

    Parameters
    ----------
    ring : str or ring
        Ring spec such as ``"Z"``, ``"Q"``, ``"GF:5"``, ``"Zmod:6"``.
    strict : bool
        Raise :class:`NotLocallySimpleError` when ``A`` has no generalized
        inverse; otherwise ``B_`` is left as ``None``.
    """

    def __init__(self, ring="Z", strict=True):
        self.ring = ring
        self.strict = strict

    def fit(self, X, y=None):
        A = check_matrix(X, self.ring, "A")
        report = general_ginverse(A)
        self.A_ = A
        self.report_ = report
        self.rank_profile_ = report.rank_profile
        self.B_ = report.B
        self.proj_image_ = report.proj_image
        self.proj_coimage_ = report.proj_coimage
        self.proj_kernel_ = report.proj_kernel
        if not report.found and self.strict:
            raise NotLocallySimpleError(report.reason, report)
        return self

    def _require_B(self):
        _check_fitted(self, "report_")
        if self.B_ is None:
            raise NotLocallySimpleError(self.report_.reason, self.report_)

    def transform(self, X):
        """``B @ V``; ``X`` has as many rows as ``A``."""
        self._require_B()
        V = check_matrix(X, self.A_.domain, "V")
        if V.m != self.A_.m:
            raise DimensionMismatch(f"V needs {self.A_.m} rows, got {V.m}")
        return self.B_ @ V

    def inverse_transform(self, X):
        """``A @ X``; undoes :meth:`transform` on the image of ``A``."""
        _check_fitted(self, "report_")
        V = check_matrix(X, self.A_.domain, "X")
        check_conformable(self.A_, V, "X")
        return self.A_ @ V

    def solve(self, X):
        """A solution of ``A Y = V``, or ``None`` when ``V`` is outside the image."""
        Y = self.transform(X)
        V = check_matrix(X, self.A_.domain, "V")
        return Y if self.A_ @ Y == V else None


class ProjectivityTest(BaseEstimator):
    """Projectivity of the module presented by a matrix ``G`` (columns are relations)."""

    def __init__(self, ring="Z"):
        self.ring = ring

    def fit(self, X, y=None):
        G = check_matrix(X, self.ring, "G")
        cert = projectivity_certificate(G)
        self.certificate_ = cert
        self.projective_ = cert.projective
        self.projection_ = cert.P
        self.rank_polynomial_ = cert.rank_polynomial
        return self
