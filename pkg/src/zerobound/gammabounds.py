"""Stirling-remainder envelopes and the gamma-ratio error machinery.

The reflection factor of the functional equation,

    Delta(s) = omega * Q^(1-2s) * prod_j Gamma(lam_j(1-s) + conj(mu_j))
                                        / Gamma(lam_j s + mu_j),

controls |L(s)| left of the critical strip.  A one-term Stirling expansion
of each log-Gamma turns log|Delta| into an explicit main part
(reflection_log_main) plus a per-factor remainder whose modulus is bounded
here (ratio_error_bound and its aggregates).  The same machinery produces
the piecewise upper envelope for |L(s)| on a window around height T
(magnitude_envelope).

The *_check functions evaluate both sides of the small analytic
inequalities the bound assembly relies on; the test suite batters them
with random admissible inputs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import AdmissibilityError, DomainError
from .selberg import (
    LFunctionData,
    StripParams,
    conductor_product,
    derive_quantities,
    require_admissible,
    threshold_height,
)

#: second Bernoulli number, the one-term Stirling remainder coefficient
B2 = 1.0 / 6.0

_SEC_GUARD = 1e-12


def _sec_sq(x: float) -> float:
    """1 / cos(x)^2 with a guard against arguments at +-pi/2."""
    c = math.cos(x)
    if abs(c) < _SEC_GUARD:
        raise DomainError(f"secant argument {x} too close to an odd multiple of pi/2")
    return 1.0 / (c * c)


def _phase(z: complex) -> float:
    """Principal argument, rejecting the branch cut and the origin."""
    if z == 0:
        raise DomainError("argument of zero is undefined")
    ph = cmath.phase(z)
    if abs(ph) >= math.pi:
        raise DomainError(f"argument of {z} lies on the branch cut")
    return ph


def stirling_remainder_bound(z: complex) -> float:
    """Majorant B2 / (2|z|) * sec^2(arg(z)/2) for the one-term Stirling remainder.

    Valid on |arg z| < pi, z != 0.
    """
    z = complex(z)
    ph = _phase(z)
    return B2 / (2.0 * abs(z)) * _sec_sq(ph / 2.0)


def _series_block(f) -> float:
    """|lam+conj(mu)|^2 + 2|(lam+conj(mu))(lam+conj(mu)-1/2)| + |mu|^2 + 2|mu(mu-1/2)|."""
    lm = f.lam + f.mu.conjugate()
    mu = f.mu
    return (
        abs(lm) ** 2
        + 2.0 * abs(lm * (lm - 0.5))
        + abs(mu) ** 2
        + 2.0 * abs(mu * (mu - 0.5))
    )


def _pair_secant(data: LFunctionData, sigma: float) -> float:
    """2 + sec^2(arg(-|sigma| + i * threshold)/2), the paired remainder kernel.

    The positive factor scaling lam_j drops out of the argument.
    """
    h = threshold_height(data)
    ph = _phase(complex(-abs(sigma), h))
    return 2.0 + _sec_sq(ph / 2.0)


def remainder_pair_bound(data: LFunctionData, j: int, sigma: float, t: float) -> float:
    """Bound for |W(-lam_j s)| + |W(lam_j s)| at s = sigma + i t.

    Needs t at or above threshold_height(data); the two remainders then sit
    away from the branch cut and the flat secant factor 2 covers the side
    whose half-argument stays below pi/4.
    """
    h = threshold_height(data)
    if t < h:
        raise AdmissibilityError(f"t = {t} is below the remainder threshold {h}")
    f = data.factors[j]
    return B2 / (2.0 * f.lam * t) * _pair_secant(data, sigma)


def ratio_error_bound(data: LFunctionData, j: int, sigma: float, t: float) -> float:
    """Bound for the j-th factor's gamma-ratio error term at s = sigma + i t.

    Four modulus terms from the truncated logarithm series (all divided by
    lam_j t, which under-estimates |lam_j s| and so over-estimates the
    error) plus the paired Stirling-remainder bound.  Scales exactly as 1/t.
    """
    h = threshold_height(data)
    if t < h:
        raise AdmissibilityError(f"t = {t} is below the remainder threshold {h}")
    f = data.factors[j]
    return _series_block(f) / (f.lam * t) + remainder_pair_bound(data, j, sigma, t)


def ratio_error_total(data: LFunctionData, sigma: float, t: float) -> float:
    """Sum of ratio_error_bound over all factors."""
    return math.fsum(ratio_error_bound(data, j, sigma, t) for j in range(data.f))


def ratio_error_sup(data: LFunctionData, strip: StripParams, T: float) -> float:
    """Supremum envelope of the total gamma-ratio error on the counting rectangle.

    Covers sigma in [a - 2R, a + 2R] and t in [T - 2R, T + 2R]; only the
    prefactor 1/(T - 2R) depends on T.  Requires T > 2R.
    """
    two_r = 2.0 * strip.R
    if T <= two_r:
        raise DomainError(f"supremum envelope needs T > 2R = {two_r}, got {T}")
    h = threshold_height(data)
    worst_sigma = -(strip.a + two_r)
    total = 0.0
    for f in data.factors:
        ph = _phase(complex(worst_sigma, h))
        block = _series_block(f) + B2 / 2.0 * (2.0 + _sec_sq(ph / 2.0))
        total += block / f.lam
    return total / (T - two_r)


def reflection_log_main(data: LFunctionData, sigma: float, t: float) -> float:
    """Main part of log|Delta(sigma + i t)|, remainder excluded.

    Equals (1/2 - sigma)(d log t + log(lambda Q^2)) + d sigma
    + Re(log(1 - sigma i / t) (d (1/2 - s) + Im(mu_cap) i / 2));
    callers pair it with ratio_error_total as the remainder envelope.
    Requires t > 0 and both gamma arguments off the branch cut.
    """
    if not t > 0.0:
        raise DomainError(f"need t > 0, got {t}")
    s = complex(sigma, t)
    for f in data.factors:
        try:
            _phase(f.lam * (1.0 - s) + f.mu.conjugate())
            _phase(f.lam * s + f.mu)
        except DomainError as exc:
            raise AdmissibilityError(
                f"gamma argument on the branch cut at s = {s}: {exc}"
            ) from None
    dq = derive_quantities(data)
    d = dq.d_L
    lq2 = conductor_product(data)
    swing = cmath.log(1.0 - complex(0.0, sigma) / t)
    weight = d * (0.5 - s) + complex(0.0, dq.mu_cap.imag / 2.0)
    return (
        (0.5 - sigma) * (d * math.log(t) + math.log(lq2))
        + d * sigma
        + (swing * weight).real
    )


def _mid_band_peak(data: LFunctionData, strip: StripParams, T: float) -> float:
    """Convexity-interpolation peak for the middle band of the envelope.

    max of the right-edge constant and the left-edge constant, each carrying
    the 3^k pole allowance; the left edge includes the gamma-ratio error
    envelope along sigma = -2.
    """
    dq = derive_quantities(data)
    lq2 = conductor_product(data)
    h = threshold_height(data)
    two_r = 2.0 * strip.R
    err = 0.0
    for f in data.factors:
        ph = _phase(complex(-2.0, h))
        block = _series_block(f) + B2 / 2.0 * (2.0 + _sec_sq(ph / 2.0))
        err += block / f.lam
    err /= T - two_r
    base = 3.0 ** data.k * data.a1 * math.pi ** 2 / 6.0
    left = base * abs(lq2) ** 2.5 * math.exp(
        2.5 * math.sqrt(5.0) * dq.d_L + abs(dq.mu_cap.imag) + err
    )
    return max(base, left)


def magnitude_envelope(
    data: LFunctionData, strip: StripParams, sigma: float, t: float, T: float
) -> float:
    """Piecewise upper envelope for |L(sigma + i t)| near height T.

    T must be admissible and t must lie in [T - 2R, T + 2R].  Right of
    sigma = 3 the Dirichlet series gives the constant a1 pi^2 / 6; left of
    sigma = -2 the reflection factor gives a power of t times an explicit
    exponential; in between a convexity interpolation applies.
    """
    require_admissible(data, strip, T)
    two_r = 2.0 * strip.R
    if not (T - two_r <= t <= T + two_r):
        raise DomainError(f"t = {t} outside the window [{T - two_r}, {T + two_r}]")
    const = data.a1 * math.pi ** 2 / 6.0
    if sigma >= 3.0:
        return const
    dq = derive_quantities(data)
    d = dq.d_L
    if sigma <= -2.0:
        lq2 = conductor_product(data)
        s = complex(sigma, t)
        swing = cmath.log(1.0 - complex(0.0, sigma) / t)
        weight = d * (0.5 - s) + complex(0.0, dq.mu_cap.imag / 2.0)
        expo = d * sigma + (swing * weight).real + ratio_error_total(data, sigma, t)
        return t ** (d * (0.5 - sigma)) * const * abs(lq2) ** (0.5 - sigma) * math.exp(expo)
    peak = _mid_band_peak(data, strip, T)
    return 2.0 ** (2.5 * d + 1.0) * peak * t ** (0.5 * d * (3.0 - sigma))


# ---------------------------------------------------------------------------
# inequality oracles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InequalityCheck:
    """Both sides of one analytic inequality; holds means lhs < rhs."""

    lhs: float
    rhs: float
    holds: bool


def _check(lhs: float, rhs: float) -> InequalityCheck:
    return InequalityCheck(lhs=lhs, rhs=rhs, holds=lhs < rhs)


def log1p_check(z: complex) -> InequalityCheck:
    """|log(1 + z)| < 2|z| for |z| < 1/2."""
    z = complex(z)
    if not abs(z) < 0.5:
        raise DomainError(f"needs |z| < 1/2, got |z| = {abs(z)}")
    return _check(abs(cmath.log(1.0 + z)), 2.0 * abs(z))


def log_linear_check(x: float) -> InequalityCheck:
    """|log(1 - x i)| < 7|x| for real x != 0."""
    if x == 0.0:
        raise DomainError("the linear bound is strict; x = 0 is excluded")
    return _check(abs(cmath.log(complex(1.0, -x))), 7.0 * abs(x))


def log_diff_check(data: LFunctionData, sigma: float, t: float) -> InequalityCheck:
    """Paired log-term bound used on the far left edge (sigma < -3, t > 0)."""
    if not sigma < -3.0:
        raise DomainError(f"needs sigma < -3, got {sigma}")
    if not t > 0.0:
        raise DomainError(f"needs t > 0, got {t}")
    dq = derive_quantities(data)
    d, im = dq.d_L, dq.mu_cap.imag
    l1 = cmath.log(1.0 - complex(0.0, sigma) / t)
    l2 = cmath.log(1.0 - complex(0.0, sigma + 1.0) / t)
    lhs = abs(
        (
            l1 * complex(d * (0.5 - sigma), im / 2.0)
            - l2 * complex(d * (-0.5 - sigma), im / 2.0)
        ).real
    )
    rhs = 2.0 / t * abs(complex(-d * sigma, im / 2.0)) - 7.0 * d / (2.0 * t) * (2.0 * sigma + 1.0)
    return _check(lhs, rhs)


def rotation_check(data: LFunctionData, sigma: float, t: float) -> InequalityCheck:
    """Rotation-term bound d(3(sigma^2+sigma)/t^2 + 2/t) for |sigma| >= 1, t > 0."""
    if not abs(sigma) >= 1.0:
        raise DomainError(f"needs |sigma| >= 1, got {sigma}")
    if not t > 0.0:
        raise DomainError(f"needs t > 0, got {t}")
    d = data.degree
    l1 = cmath.log(1.0 - complex(0.0, sigma) / t)
    l2 = cmath.log(1.0 - complex(0.0, sigma + 1.0) / t)
    lhs = abs((-d - d * l1 * 1j * t + d * l2 * 1j * t).real)
    rhs = d * (3.0 * (sigma * sigma + sigma) / (t * t) + 2.0 / t)
    return _check(lhs, rhs)


def edge_real_check(data: LFunctionData, t: float) -> InequalityCheck:
    """Left-edge real-part bound ((5 sqrt 5 + 4)/2) d + |Im mu_cap| for t >= 1."""
    if not t >= 1.0:
        raise DomainError(f"needs t >= 1, got {t}")
    dq = derive_quantities(data)
    d, im = dq.d_L, dq.mu_cap.imag
    lhs = (
        cmath.log(1.0 + 2j / t) * complex(2.5 * d, -d * t + im / 2.0)
    ).real
    rhs = (5.0 * math.sqrt(5.0) + 4.0) / 2.0 * d + abs(im)
    return _check(lhs, rhs)
