"""Assembly of the explicit zero-counting error constants.

The count of non-trivial zeros with ordinate in (T0, T] deviates from the
smooth main term by less than an explicit total, built from four pieces:

* log_integral_bound    - the horizontal log-integral difference across the
                          strip (a log(T/T0) slope plus an O(1/T0) tail),
* vertical_integral_bound - the fixed pi^2/(3 log 2) bound for the two
                          vertical log-integrals right of the series edge,
* disc_count_bound      - per-height bound for the zero count of the
                          auxiliary disc function, driving the argument
                          integral bound pi R (disc_count_bound + 2),
* trivial_zero_window   - allowance for trivial zeros straying into the
                          counted rectangle.

total_count_error stitches these into the (T0, T]-window bound, and
window_coefficients / doubling_coefficients flatten that bound into the
c1 log T + c2 + c3 / T coefficient form (for the (T0, T] and (T, 2T]
windows respectively).  Everything is a pure function of the
functional-equation datum, the strip, and the heights.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import BoundaryWarning, DomainError, ValidationError
from .gammabounds import B2, _phase, _sec_sq, _series_block, ratio_error_sup
from .selberg import (
    LFunctionData,
    StripParams,
    conductor_product,
    derive_quantities,
    require_admissible,
    threshold_height,
)

LOG2 = math.log(2.0)
TWO_PI = 2.0 * math.pi

#: pre-ceiling values closer than this to an integer trigger BoundaryWarning
CEIL_GUARD = 1e-6


def _ratio_error_slope(data: LFunctionData, strip: StripParams) -> float:
    """Coefficient of log(T/T0) in the integrated gamma-ratio error.

    Per factor: (2/lam) * (series block + two paired-remainder kernels, one
    at height -b and one at -b - 1, each weighted B2/4).
    """
    h = threshold_height(data)
    total = 0.0
    for f in data.factors:
        ph_b = _phase(complex(-strip.b, h))
        ph_b1 = _phase(complex(-strip.b - 1.0, h))
        block = (
            _series_block(f)
            + B2 / 4.0 * (2.0 + _sec_sq(ph_b / 2.0))
            + B2 / 4.0 * (2.0 + _sec_sq(ph_b1 / 2.0))
        )
        total += 2.0 / f.lam * block
    return total


def integrated_ratio_error(data: LFunctionData, strip: StripParams, T0: float, T: float) -> float:
    """Integral of the paired gamma-ratio errors over ordinates [T0, T].

    Proportional to log(T/T0); requires T >= T0 > 0.
    """
    if not T0 > 0.0:
        raise DomainError(f"needs T0 > 0, got {T0}")
    if T < T0:
        raise DomainError(f"needs T >= T0, got T = {T} < T0 = {T0}")
    return math.log(T / T0) * _ratio_error_slope(data, strip)


def _log_term_slope(data: LFunctionData, strip: StripParams) -> float:
    """-(7/2) d (2b+1) + 2|-d b + Im(mu_cap) i / 2| + 2d, the other log slope."""
    dq = derive_quantities(data)
    d, im = dq.d_L, dq.mu_cap.imag
    b = strip.b
    return -3.5 * d * (2.0 * b + 1.0) + 2.0 * abs(complex(-d * b, im / 2.0)) + 2.0 * d


def log_integral_bound(data: LFunctionData, strip: StripParams, T0: float, T: float) -> float:
    """Horizontal log-integral bound for the window [T0, T].

    log(T/T0) * (log-term slope) + 3 d (b^2 + b) / T0 + integrated ratio
    error.  Deliberately evaluated as a pure expression: the coefficient
    assembly feeds it T = 1 < T0, where the log factor goes negative.
    """
    if not T0 > 0.0:
        raise DomainError(f"needs T0 > 0, got {T0}")
    if not T > 0.0:
        raise DomainError(f"needs T > 0, got {T}")
    d = data.degree
    b = strip.b
    slope = _log_term_slope(data, strip) + _ratio_error_slope(data, strip)
    return math.log(T / T0) * slope + 3.0 * d * (b * b + b) / T0


def vertical_integral_bound() -> float:
    """pi^2 / (3 log 2), the uniform bound for each vertical log-integral."""
    return math.pi ** 2 / (3.0 * LOG2)


def disc_count_bound(data: LFunctionData, strip: StripParams, T: float) -> float:
    """Bound for the zero count of the auxiliary disc function at height T.

    (1/log 2) * (d (1/2 - a + 2R) log(2T) + log(a1 pi^2/6) + ratio-error sup
    + max of the reflection branch and the interpolation branch).  T must be
    admissible.
    """
    require_admissible(data, strip, T)
    dq = derive_quantities(data)
    d, im = dq.d_L, dq.mu_cap.imag
    lq2 = conductor_product(data)
    a, r = strip.a, strip.R
    two_r = 2.0 * r
    c = 0.5 - a + two_r
    edge = abs(complex(1.0, -(a + two_r) / (T - two_r)))
    reflect = (
        max(2.5 * math.log(abs(lq2)), c * math.log(abs(lq2)))
        - 2.0 * d
        + edge * d * c
        + d * (a + two_r)
        + (a + two_r) / (T - two_r) * abs(im / 2.0)
    )
    interp = (2.5 * d + 1.0) * LOG2 + data.k * math.log(3.0) + max(
        0.0, 2.5 * math.log(abs(lq2)) + 2.5 * math.sqrt(5.0) * d + abs(im)
    )
    return (
        d * c * math.log(2.0 * T)
        + math.log(data.a1 * math.pi ** 2 / 6.0)
        + ratio_error_sup(data, strip, T)
        + max(reflect, interp)
    ) / LOG2


def argument_integral_bound(data: LFunctionData, strip: StripParams, T: float) -> float:
    """pi R (disc_count_bound(T) + 2), bounding the horizontal argument integral.

    Valid for the full strip (b, a) and, a fortiori, for (b + 1, a).
    """
    return math.pi * strip.R * (disc_count_bound(data, strip, T) + 2.0)


def trivial_zero_window(data: LFunctionData, strip: StripParams) -> float:
    """Allowance for trivial zeros and strays with real part in (b, b+1].

    f * (|(b+1) max lam + min Re mu| - b max lam + (b+1) min lam
         - min Re mu + max Re mu).
    """
    b = strip.b
    lmax = max(f.lam for f in data.factors)
    lmin = min(f.lam for f in data.factors)
    rmin = min(f.mu.real for f in data.factors)
    rmax = max(f.mu.real for f in data.factors)
    return data.f * (
        abs((b + 1.0) * lmax + rmin) - b * lmax + (b + 1.0) * lmin - rmin + rmax
    )


@dataclass(frozen=True)
class BranchConstants:
    """Branch selector and the two constants it gates.

    alpha = 0 keeps the reflection branch (h2 then carries the 1/(T - 2R)
    payload); alpha = 1 keeps the interpolation branch and forces h2 = 0.
    """

    alpha: int
    h1: float
    h2: float


def branch_constants(data: LFunctionData, strip: StripParams, T0: float) -> BranchConstants:
    """Pick the branch whose bound h1 + h2/(T0 - 2R) is larger at T0.

    Ties resolve to the interpolation branch (alpha = 1).
    """
    two_r = 2.0 * strip.R
    if not T0 > two_r:
        raise DomainError(f"needs T0 > 2R = {two_r}, got {T0}")
    dq = derive_quantities(data)
    d, im = dq.d_L, dq.mu_cap.imag
    lq2 = conductor_product(data)
    a, r = strip.a, strip.R
    c = 0.5 - a + two_r
    h1_reflect = max(2.5 * math.log(abs(lq2)), c * math.log(abs(lq2))) + d * (-1.5 + 4.0 * r)
    h2_reflect = d * c * (a + two_r) + (a + two_r) * abs(im / 2.0)
    h1_interp = (2.5 * d + 1.0) * LOG2 + data.k * math.log(3.0) + max(
        0.0, 2.5 * math.log(abs(lq2)) + 2.5 * math.sqrt(5.0) * d + abs(im)
    )
    if h1_reflect + h2_reflect / (T0 - two_r) > h1_interp:
        return BranchConstants(alpha=0, h1=h1_reflect, h2=h2_reflect)
    return BranchConstants(alpha=1, h1=h1_interp, h2=0.0)


def total_count_error(data: LFunctionData, strip: StripParams, T0: float, T: float) -> float:
    """Explicit bound for |count on (T0, T] - main term at T|.

    T0 must be admissible and T > T0.
    """
    require_admissible(data, strip, T0, label="T0")
    if not T > T0:
        raise DomainError(f"needs T > T0, got T = {T} <= T0 = {T0}")
    d = data.degree
    lq2 = conductor_product(data)
    r = strip.R
    return (
        d / TWO_PI * T0 * math.log(T0 / math.e)
        + T0 / TWO_PI * abs(math.log(lq2))
        + log_integral_bound(data, strip, T0, T) / TWO_PI
        + math.pi / (3.0 * LOG2)
        + (r - 0.5) * (disc_count_bound(data, strip, T0) + disc_count_bound(data, strip, T) + 4.0)
        + trivial_zero_window(data, strip)
    )


@dataclass(frozen=True)
class Coefficients:
    """One (c1, c2, c3) triple of the flattened bound c1 log T + c2 + c3/T."""

    c1: float
    c2: float
    c3: float

    def evaluate(self, T: float) -> float:
        if not T > 0.0:
            raise DomainError(f"needs T > 0, got {T}")
        return self.c1 * math.log(T) + self.c2 + self.c3 / T


def window_coefficients(data: LFunctionData, strip: StripParams, T0: float) -> Coefficients:
    """Coefficients dominating total_count_error(T0, T) for every T > T0.

    c1 carries both log slopes and the disc-bound growth; it does not
    depend on T0.  c2 absorbs the formal T = 1 evaluation of the
    log-integral bound; c3 carries the 1/(T - 2R) payloads through the
    monotone substitution 1/(T - 2R) <= T0 / ((T0 - 2R) T).
    """
    require_admissible(data, strip, T0, label="T0")
    dq = derive_quantities(data)
    d = dq.d_L
    lq2 = conductor_product(data)
    a, b, r = strip.a, strip.b, strip.R
    two_r = 2.0 * r
    c = 0.5 - a + two_r
    bc = branch_constants(data, strip, T0)

    c1 = (
        (_log_term_slope(data, strip) + _ratio_error_slope(data, strip)) / TWO_PI
        + (r - 0.5) * d * c / LOG2
    )
    c2 = (
        d / TWO_PI * T0 * math.log(T0 / math.e)
        + T0 / TWO_PI * abs(math.log(lq2))
        + math.pi / (3.0 * LOG2)
        + 4.0 * r - 2.0
        + 3.0 * d * (b * b + b) / (TWO_PI * T0)
        + trivial_zero_window(data, strip)
        + log_integral_bound(data, strip, T0, 1.0) / TWO_PI
        + (r - 0.5) * (disc_count_bound(data, strip, T0) + d * c)
        + (r - 0.5) / LOG2 * (math.log(data.a1 * math.pi ** 2 / 6.0) + bc.h1)
    )
    c3 = (
        (r - 0.5) / LOG2
        * T0 / (T0 - two_r)
        * (ratio_error_sup(data, strip, two_r + 1.0) + bc.h2)
    )
    return Coefficients(c1=c1, c2=c2, c3=c3)


def doubling_coefficients(data: LFunctionData, strip: StripParams, T0: float) -> Coefficients:
    """Coefficients for the doubled window (T, 2T], valid for every T >= T0.

    The window's own starting height replaces T0 in the horizontal piece,
    so no T0 log T0 term survives; both disc bounds grow with log T, which
    doubles the c1 slope relative to the single window.
    """
    require_admissible(data, strip, T0, label="T0")
    dq = derive_quantities(data)
    d = dq.d_L
    a, b, r = strip.a, strip.b, strip.R
    two_r = 2.0 * r
    c = 0.5 - a + two_r
    bc = branch_constants(data, strip, T0)

    c1 = d / LOG2 * (2.0 * r - 1.0) * c
    c2 = (
        LOG2 / TWO_PI * _log_term_slope(data, strip)
        + LOG2 * _ratio_error_slope(data, strip) / TWO_PI
        + 2.0 * math.pi / (3.0 * LOG2)
        + 4.0 * r - 2.0
        + 3.0 * d * (2.0 * r - 1.0) * c
        + (2.0 * r - 1.0) / LOG2 * (math.log(data.a1 * math.pi ** 2 / 6.0) + bc.h1)
    )
    c3 = (
        3.0 * d * (b * b + b) / (4.0 * math.pi)
        + (r - 0.5) / LOG2
        * T0 * (3.0 * T0 - 4.0 * r) / (2.0 * (T0 - two_r) * (T0 - r))
        * (ratio_error_sup(data, strip, T0) + bc.h2)
    )
    return Coefficients(c1=c1, c2=c2, c3=c3)


def shifted_constant(c2_main: float, n_plus_T0: int, n_minus_T0: int) -> float:
    """c2 shifted by the known zero count up to T0: c2 + max(N+, N-)."""
    if n_plus_T0 < 0 or n_minus_T0 < 0:
        raise ValidationError("zero counts must be nonnegative")
    return c2_main + max(n_plus_T0, n_minus_T0)


def ceil_guarded(x: float, label: str = "") -> int:
    """math.ceil with a warning when x sits within CEIL_GUARD of an integer.

    The published table entries are ceilings of smooth values nowhere near
    integers, so proximity signals a transcription or rounding hazard
    rather than a legitimate value.
    """
    if abs(x - round(x)) < CEIL_GUARD:
        warnings.warn(
            f"pre-ceiling value {x!r}{' for ' + label if label else ''} is within "
            f"{CEIL_GUARD} of an integer; the ceiling may be unreliable",
            BoundaryWarning,
            stacklevel=2,
        )
    return math.ceil(x)


@dataclass(frozen=True)
class BoundReport:
    """Every intermediate bound plus the headline constants for one (T0, T)."""

    T0: float
    T: float
    S: float
    R1: float
    V_star_T0: float
    V_star_T: float
    R2_T0: float
    R2_T: float
    alpha: int
    h1: float
    h2: float
    R_total: float
    c1_main: float
    c2_main: float
    c3_main: float
    c1_dbl: float
    c2_dbl: float
    c3_dbl: float

    def __post_init__(self) -> None:
        if self.S < 0.0 or self.V_star_T0 < 0.0 or self.V_star_T < 0.0:
            raise ValidationError("negative error envelope in bound report")
        if self.R2_T0 <= 0.0 or self.R2_T <= 0.0 or self.R_total <= 0.0:
            raise ValidationError("non-positive count bound in bound report")
        if self.alpha not in (0, 1):
            raise ValidationError(f"alpha must be 0 or 1, got {self.alpha}")

    def to_json_dict(self) -> dict:
        return {
            "t0": self.T0,
            "t": self.T,
            "s": self.S,
            "r1": self.R1,
            "v_star_t0": self.V_star_T0,
            "v_star_t": self.V_star_T,
            "r2_t0": self.R2_T0,
            "r2_t": self.R2_T,
            "alpha": self.alpha,
            "h1": self.h1,
            "h2": self.h2,
            "r_total": self.R_total,
            "c1_main": self.c1_main,
            "c2_main": self.c2_main,
            "c3_main": self.c3_main,
            "c1_dbl": self.c1_dbl,
            "c2_dbl": self.c2_dbl,
            "c3_dbl": self.c3_dbl,
        }


def bound_report(data: LFunctionData, strip: StripParams, T0: float, T: float) -> BoundReport:
    """Evaluate every bound of the pipeline at one (T0, T) pair."""
    require_admissible(data, strip, T0, label="T0")
    if not T > T0:
        raise DomainError(f"needs T > T0, got T = {T} <= T0 = {T0}")
    bc = branch_constants(data, strip, T0)
    main = window_coefficients(data, strip, T0)
    dbl = doubling_coefficients(data, strip, T0)
    return BoundReport(
        T0=T0,
        T=T,
        S=integrated_ratio_error(data, strip, T0, T),
        R1=log_integral_bound(data, strip, T0, T),
        V_star_T0=ratio_error_sup(data, strip, T0),
        V_star_T=ratio_error_sup(data, strip, T),
        R2_T0=disc_count_bound(data, strip, T0),
        R2_T=disc_count_bound(data, strip, T),
        alpha=bc.alpha,
        h1=bc.h1,
        h2=bc.h2,
        R_total=total_count_error(data, strip, T0, T),
        c1_main=main.c1,
        c2_main=main.c2,
        c3_main=main.c3,
        c1_dbl=dbl.c1,
        c2_dbl=dbl.c2,
        c3_dbl=dbl.c3,
    )
