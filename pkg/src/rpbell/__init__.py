"""Exact (r_1, ..., r_p)-Stirling numbers and Bell polynomials."""
from .analysis import (
    MaxIndexReport,
    RootCertificate,
    certify_real_negative_roots,
    check_newton_inequality,
    check_strong_log_concavity,
    max_index_report,
)
from .bell import (
    BellPolynomial,
    BellTildePolynomial,
    bell_next,
    bell_poly,
    bell_tilde,
    r_bell_poly,
    verify_dobinski,
)
from .exact_arith import IntPolynomial, TruncatedSeries
from .report import IdentityId, VerificationReport
from .rp_stirling import (
    RestrictionVector,
    a_coeffs,
    poly_P,
    rp_stirling2,
    rp_stirling2_via_reduction,
)
from .stirling_core import (
    r_stirling1_unsigned,
    r_stirling2,
    stirling1_unsigned,
    stirling2,
)

__version__ = "0.1.0"
