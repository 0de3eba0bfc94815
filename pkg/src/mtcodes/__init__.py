"""Multi-twisted codes over finite fields: reduced GPMs, Euclidean and Galois duals."""

from .gf import FieldElement, FieldError, FieldSpec, frobenius, in_subfield, trace_to_subfield
from .poly import LaurentPoly, Poly, parse_laurent, parse_poly
from .polymat import (
    HNFResult,
    LaurentMatrix,
    NotInRowModuleError,
    PolyMatrix,
    RankDeficientError,
    hermite_normal_form,
    poly_matrix,
    solve_left_factor,
)
from .mtcode import CodeSpec, InvariantError, MTCode, load_codespec
from .duals import (
    DualCertificate,
    PreconditionError,
    direct_sum_check,
    euclidean_dual,
    frobenius_code,
    galois_identities_check,
    left_galois_dual,
    parity_steps,
    qc_qt_gqc_dual_gpm,
    right_galois_dual,
    sigma_intersection,
    trace_auxiliary_check,
    two_sided_galois_dual,
)

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "FieldElement",
    "FieldError",
    "frobenius",
    "in_subfield",
    "trace_to_subfield",
    "Poly",
    "LaurentPoly",
    "parse_poly",
    "parse_laurent",
    "PolyMatrix",
    "LaurentMatrix",
    "HNFResult",
    "NotInRowModuleError",
    "RankDeficientError",
    "hermite_normal_form",
    "poly_matrix",
    "solve_left_factor",
    "MTCode",
    "CodeSpec",
    "InvariantError",
    "load_codespec",
    "DualCertificate",
    "PreconditionError",
    "parity_steps",
    "euclidean_dual",
    "qc_qt_gqc_dual_gpm",
    "frobenius_code",
    "right_galois_dual",
    "left_galois_dual",
    "galois_identities_check",
    "sigma_intersection",
    "two_sided_galois_dual",
    "trace_auxiliary_check",
    "direct_sum_check",
]
