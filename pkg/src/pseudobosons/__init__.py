"""Pseudo-bosonic eigenfamilies from generalized Bogoliubov transformations.

The transformation (a, b) = (beta c - delta c+, -alpha c + gamma c+) with
beta gamma - alpha delta = 1 keeps [a, b] = 1 without b being the adjoint
of a. This package realizes a and b as first-order differential operators,
builds the biorthogonal eigenfamilies phi_n and Psi_n of the number-like
operators ba and (ba)+, evaluates their norms both in closed form and by
independent quadrature, and classifies the resulting families as Riesz
bases, plain biorthogonal bases, or mere quasi-bases on a dense domain.
"""

from .errors import (
    DegenerateExponentError,
    DeterminantError,
    NonDecayingIntegrandError,
    NonIntegrableError,
    NotPseudoBosonicError,
    OrderingError,
    PseudoBosonError,
    UseOracleError,
)
from .specialfns import (
    LogMagnitude,
    gaussian_moment,
    hermite_basis_function,
    hermite_coeffs,
    hermite_value,
    legendre_asymptotic,
    legendre_eval,
)
from .gausspoly import (
    GaussPoly,
    LadderOperator,
    adjoint,
    apply_ladder,
    commutator_check,
    inner_product,
)
from .gbt import (
    GbtParams,
    NormalizabilityReport,
    SwansonParams,
    anomaly,
    constrained_family,
    normalizability,
    swanson,
    validate,
)
from .eigensystem import (
    EigenFamily,
    NormalizationConvention,
    biorthonormality_matrix,
    build_family,
    closed_form_phi,
    closed_form_psi,
    default_convention,
    ground_states,
    inner_with_phi,
    inner_with_psi,
    ladder_operators,
    number_operator_check,
    symmetric_convention,
    verify_ladder,
)
from .norms import (
    AsymptoticsReport,
    CalibrationRecord,
    NormProductTrend,
    NormSeries,
    asymptotics,
    calibration,
    closed_form_series,
    norm_product_trend,
    norm_sq_phi,
    norm_sq_psi,
    prudnikov_halfline,
)
from .oracle import QuadratureSpec, QuadResult, quad_inner, quad_norm_series
from .quasibasis import (
    BIORTHOGONAL_BASES_NOT_RIESZ,
    BasisVerdict,
    DomainSpec,
    NOT_PSEUDO_BOSONIC,
    QUASI_BASES_ONLY,
    QuasiBasisCheck,
    RIESZ_LIKE_COLLAPSE,
    UNDETERMINED_CLOSED_FORM,
    domain_membership,
    domain_spec_for,
    partial_sums,
    verdict,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticsReport",
    "BIORTHOGONAL_BASES_NOT_RIESZ",
    "BasisVerdict",
    "CalibrationRecord",
    "DegenerateExponentError",
    "DeterminantError",
    "DomainSpec",
    "EigenFamily",
    "GaussPoly",
    "GbtParams",
    "LadderOperator",
    "LogMagnitude",
    "NOT_PSEUDO_BOSONIC",
    "NonDecayingIntegrandError",
    "NonIntegrableError",
    "NormProductTrend",
    "NormSeries",
    "NormalizabilityReport",
    "NormalizationConvention",
    "NotPseudoBosonicError",
    "OrderingError",
    "PseudoBosonError",
    "QUASI_BASES_ONLY",
    "QuadResult",
    "QuadratureSpec",
    "QuasiBasisCheck",
    "RIESZ_LIKE_COLLAPSE",
    "SwansonParams",
    "UNDETERMINED_CLOSED_FORM",
    "UseOracleError",
    "adjoint",
    "anomaly",
    "apply_ladder",
    "asymptotics",
    "biorthonormality_matrix",
    "build_family",
    "calibration",
    "closed_form_phi",
    "closed_form_psi",
    "closed_form_series",
    "commutator_check",
    "constrained_family",
    "default_convention",
    "domain_membership",
    "domain_spec_for",
    "gaussian_moment",
    "ground_states",
    "hermite_basis_function",
    "hermite_coeffs",
    "hermite_value",
    "inner_product",
    "inner_with_phi",
    "inner_with_psi",
    "ladder_operators",
    "legendre_asymptotic",
    "legendre_eval",
    "norm_product_trend",
    "norm_sq_phi",
    "norm_sq_psi",
    "normalizability",
    "number_operator_check",
    "partial_sums",
    "prudnikov_halfline",
    "quad_inner",
    "quad_norm_series",
    "swanson",
    "symmetric_convention",
    "validate",
    "verdict",
    "verify_ladder",
]
