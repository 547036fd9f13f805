"""Certified approximations for Bessel J_nu and Airy Ai(-x).

Every approximation carries an explicit half-width bounding its error;
every inequality is a checkable report; a high-precision series evaluator
arbitrates all claims.
"""

from .oracle import (
    DEFAULT_CTX,
    DomainError,
    EvalResult,
    Order,
    PrecisionCtx,
    PrecisionError,
    airy_ai_neg_prime_ref,
    airy_ai_neg_ref,
    bessel_j_prime_ref,
    bessel_j_ref,
    gamma,
    quad,
    refine_root,
)
from .approx import (
    ApproxValue,
    PhaseValue,
    airy_approx,
    best_approx,
    classic_oscillatory,
    olver_coefficient,
    olver_expansion,
    phase_B,
    sharper_oscillatory,
    simplified_oscillatory,
    transition,
    transition_x,
)
from .bounds import (
    AIRY_C,
    BoundReport,
    SoninSample,
    airy_envelope_maxima,
    bound_airy_envelope,
    bound_derivative,
    bound_envelope,
    bound_log_derivative,
    bound_monotonic,
    bound_near_first_zero,
    bound_watson,
    bound_wronskian_kernel,
    leftmost_max_check,
    lemma_integral_check,
    sonin_eval,
)
from .zeros import (
    ZeroEstimate,
    airy_zero_estimate,
    bessel_first_zeros_estimate,
    center_gap_check,
    conjecture_check,
    refine_airy_zero,
    refine_bessel_zero,
)
from .scan import (
    GridSpec,
    ScanReport,
    ScanRow,
    SupResult,
    olenko_sup,
    scan_rows,
    verify_approx_grid,
    verify_bounds_grid,
)

__all__ = [
    "AIRY_C",
    "ApproxValue",
    "BoundReport",
    "DEFAULT_CTX",
    "DomainError",
    "EvalResult",
    "GridSpec",
    "Order",
    "PhaseValue",
    "PrecisionCtx",
    "PrecisionError",
    "ScanReport",
    "ScanRow",
    "SoninSample",
    "SupResult",
    "ZeroEstimate",
    "airy_ai_neg_prime_ref",
    "airy_ai_neg_ref",
    "airy_approx",
    "airy_envelope_maxima",
    "airy_zero_estimate",
    "bessel_first_zeros_estimate",
    "bessel_j_prime_ref",
    "bessel_j_ref",
    "best_approx",
    "bound_airy_envelope",
    "bound_derivative",
    "bound_envelope",
    "bound_log_derivative",
    "bound_monotonic",
    "bound_near_first_zero",
    "bound_watson",
    "bound_wronskian_kernel",
    "center_gap_check",
    "classic_oscillatory",
    "conjecture_check",
    "gamma",
    "leftmost_max_check",
    "lemma_integral_check",
    "olenko_sup",
    "olver_coefficient",
    "olver_expansion",
    "phase_B",
    "quad",
    "refine_airy_zero",
    "refine_bessel_zero",
    "refine_root",
    "scan_rows",
    "sharper_oscillatory",
    "simplified_oscillatory",
    "sonin_eval",
    "transition",
    "transition_x",
    "verify_approx_grid",
    "verify_bounds_grid",
]
