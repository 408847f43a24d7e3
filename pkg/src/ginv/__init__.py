"""Exact generalized inverses of matrices over commutative rings.

The main entry point is :func:`general_ginverse`, which decides whether a
matrix over a strongly discrete ring has a generalized inverse and returns
one with its projectors and rank decomposition.
"""

from .counting import OpCounts, count_ops
from .cramer import MinorCombination, adj_alpha_beta, ginverse_from_comaximal_minors
from .crossed import (
    adj_k_horner,
    adj_k_minor_sum,
    crossed_rank_k_decision,
    decide_crossed_general,
    mixed_gram_coeffs,
)
from .exceptions import (
    BadIndexSet,
    BudgetExceeded,
    CertificateInvalid,
    DimensionMismatch,
    GinvError,
    NotAGInverse,
    NotIdempotent,
    NotLocallySimpleError,
    NotPrime,
    NotProjection,
    NotSquare,
    ParseError,
    RingMismatch,
    UnsupportedRing,
)
from .laurent import LaurentPoly, LaurentRing, primitivity_certificate
from .matrix import (
    Matrix,
    adjugate,
    char_series,
    det,
    determinantal_ideal_gens,
    minor,
    rank_at_most,
    rank_polynomial,
)
from .nagata import (
    GInverseReport,
    GramData,
    a_circ,
    extract_base_ginverse,
    general_ginverse,
    gram_data,
    projectivity_certificate,
    rank_constant_pipeline,
)
from .rings import Q, Z, idempotent_generator_of_ideal, make_ring, retract

__version__ = "0.1.0"


def __getattr__(name):
    # the estimator layer pulls in scikit-learn; load it on first use only
    if name in ("GeneralizedInverse", "ProjectivityTest"):
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module 'ginv' has no attribute {name!r}")
