"""Exception types shared across the package."""


class GinvError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GinvError, ValueError):
    pass


class NotPrime(GinvError, ValueError):
    pass


class NotIdempotent(GinvError, ValueError):
    pass


class RingMismatch(GinvError, TypeError):
    pass


class DimensionMismatch(GinvError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class BadIndexSet(GinvError, ValueError):
    pass


class NotProjection(GinvError, ValueError):
    pass


class NotAGInverse(GinvError, ValueError):
    pass


class CertificateInvalid(GinvError, AssertionError):
    """A computed certificate failed its own verification.

    This never signals a negative mathematical answer; it means an
    arithmetic routine returned something inconsistent.
    """


class UnsupportedRing(GinvError, TypeError):
    pass


class BudgetExceeded(GinvError, RuntimeError):
    pass


class NotLocallySimpleError(GinvError, ValueError):
    """Raised by the estimator API when a matrix has no generalized inverse."""

    def __init__(self, reason, report=None):
        super().__init__(reason)
        self.reason = reason
        self.report = report
