"""Explicit zero-counting error constants for L-functions with gamma-factor
functional equations, plus a verification harness for external zero tables."""

from .bounds import (
    BoundReport,
    BranchConstants,
    Coefficients,
    argument_integral_bound,
    bound_report,
    branch_constants,
    ceil_guarded,
    disc_count_bound,
    doubling_coefficients,
    integrated_ratio_error,
    log_integral_bound,
    shifted_constant,
    total_count_error,
    trivial_zero_window,
    vertical_integral_bound,
    window_coefficients,
)
from .errors import (
    AdmissibilityError,
    BoundaryWarning,
    DomainError,
    InvalidStripError,
    ValidationError,
    ZeroboundError,
    ZeroFileError,
)
from .gammabounds import (
    InequalityCheck,
    edge_real_check,
    log1p_check,
    log_diff_check,
    log_linear_check,
    magnitude_envelope,
    ratio_error_bound,
    ratio_error_sup,
    ratio_error_total,
    reflection_log_main,
    remainder_pair_bound,
    rotation_check,
    stirling_remainder_bound,
)
from .newform import (
    NewformSpec,
    closed_form_constants,
    newform_params,
    newform_strip,
    pipeline_constants,
    table_generate,
    table_row,
)
from .selberg import (
    AdmissibleHeight,
    DerivedQuantities,
    GammaFactor,
    LFunctionData,
    StripParams,
    conductor_product,
    derive_quantities,
    load_document,
    main_term,
    min_admissible_height,
    require_admissible,
    select_strip,
    tail_sum,
    threshold_height,
)
from .zeros import VerificationReport, ZeroList, check_bound, count_window, load_zeros

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
