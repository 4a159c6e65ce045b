"""Functional-equation data and the invariants derived from it.

The objects here describe a Dirichlet series L(s) = sum a(n) n^-s whose
completion Q^s * prod_j Gamma(lam_j s + mu_j) * L(s) satisfies a reflection
equation s <-> 1 - s with a unimodular root number.  Everything downstream
(gamma-ratio envelopes, explicit zero-counting constants) is a function of
this datum alone; no coefficient a(n) beyond the Ramanujan constant a1 is
ever needed.

Conventions
-----------
* degree d = 2 * sum_j lam_j (required to be >= 1; degenerate series with
  d = 0 are rejected at construction),
* lambda_cap = prod_j lam_j^(2 lam_j), so log(lambda_cap) = 2 sum lam log lam,
* mu_cap = 4 * sum_j (1/2 - mu_j); only Im(mu_cap) enters any bound,
* the strip abscissae a > 2 and b < -3 are chosen so that the coefficient
  tails sum_{n>=2} a1 n^-a and sum_{n>=2} a1 n^(b+1) stay below 1/2 and 1.

All dataclasses are frozen; every function is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AdmissibilityError, DomainError, InvalidStripError, ValidationError

#: tolerance for the |omega| = 1 check
OMEGA_MODULUS_TOL = 1e-12

#: nudge added when the strict admissibility constraint is the binding one
STRICT_NUDGE = 1e-9

#: hard cap on the tail-sum cutoff (keeps pathological small exponents finite)
_TAIL_MAX_TERMS = 50_000_000


@dataclass(frozen=True)
class GammaFactor:
    """One factor Gamma(lam * s + mu) of the completed series.

    lam must be a positive real and Re(mu) >= 0.
    """

    lam: float
    mu: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "mu", complex(self.mu))
        if not self.lam > 0.0:
            raise ValidationError(f"gamma factor needs lam > 0, got {self.lam}")
        if self.mu.real < 0.0:
            raise ValidationError(f"gamma factor needs Re(mu) >= 0, got {self.mu}")


@dataclass(frozen=True)
class LFunctionData:
    """The functional-equation datum of one L-function.

    Fields
    ------
    factors : ordered gamma factors (at least one)
    Q       : positive conductor factor multiplying s in the completion
    omega   : root number, |omega| = 1 (stored for completeness; it cancels
              in every modulus bound and is validated only for modulus)
    k       : order of the pole at s = 1 (0 for entire functions)
    a1      : Ramanujan constant, |a(n)| <= a1 * n with a1 >= 1
    """

    factors: tuple[GammaFactor, ...]
    Q: float
    omega: complex
    k: int
    a1: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "Q", float(self.Q))
        object.__setattr__(self, "omega", complex(self.omega))
        object.__setattr__(self, "a1", float(self.a1))
        if not self.factors:
            raise ValidationError("need at least one gamma factor")
        if not all(isinstance(f, GammaFactor) for f in self.factors):
            raise ValidationError("factors must be GammaFactor instances")
        if not self.Q > 0.0:
            raise ValidationError(f"Q must be positive, got {self.Q}")
        if abs(abs(self.omega) - 1.0) > OMEGA_MODULUS_TOL:
            raise ValidationError(f"|omega| must be 1, got |{self.omega}| = {abs(self.omega)}")
        if not isinstance(self.k, int) or self.k < 0:
            raise ValidationError(f"pole order k must be a nonnegative integer, got {self.k}")
        if self.a1 < 1.0:
            raise ValidationError(f"a1 must be >= 1, got {self.a1}")
        if self.degree < 1.0:
            raise ValidationError(
                f"degree {self.degree} < 1; degenerate data is rejected"
            )

    @property
    def f(self) -> int:
        """Number of gamma factors."""
        return len(self.factors)

    @property
    def degree(self) -> float:
        """d = 2 * sum_j lam_j."""
        return 2.0 * math.fsum(f.lam for f in self.factors)

    def to_json_dict(self) -> dict:
        """Interchange form used by the CLI (see also load_document)."""
        return {
            "factors": [
                {"lambda": f.lam, "mu_re": f.mu.real, "mu_im": f.mu.imag}
                for f in self.factors
            ],
            "Q": self.Q,
            "omega_re": self.omega.real,
            "omega_im": self.omega.imag,
            "k": self.k,
            "a1": self.a1,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "LFunctionData":
        try:
            factors = tuple(
                GammaFactor(f["lambda"], complex(f["mu_re"], f.get("mu_im", 0.0)))
                for f in obj["factors"]
            )
            return cls(
                factors=factors,
                Q=obj["Q"],
                omega=complex(obj["omega_re"], obj.get("omega_im", 0.0)),
                k=int(obj["k"]),
                a1=obj["a1"],
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed L-function document: {exc}") from exc


@dataclass(frozen=True)
class DerivedQuantities:
    """Shorthand invariants of an LFunctionData.

    u is carried for completeness (it is purely imaginary-shift bookkeeping
    and no implemented bound consumes it).
    """

    d_L: float
    lambda_cap: float
    v: float
    u: complex
    mu_cap: complex


def derive_quantities(data: LFunctionData) -> DerivedQuantities:
    """Compute d, lambda_cap, v, u and mu_cap from the gamma factors.

    Pure and deterministic: repeated calls return bitwise-identical values.
    """
    d = data.degree
    lambda_cap = 1.0
    v = 0.0
    u = 0j
    mu_cap = 0j
    for f in data.factors:
        loglam = math.log(f.lam)
        lambda_cap *= f.lam ** (2.0 * f.lam)
        v += f.lam * loglam
        u += (f.mu.conjugate() - 0.5) * loglam
        mu_cap += 4.0 * (0.5 - f.mu)
    return DerivedQuantities(d_L=d, lambda_cap=lambda_cap, v=v, u=u, mu_cap=mu_cap)


def conductor_product(data: LFunctionData) -> float:
    """lambda_cap * Q^2, the combination entering every main term."""
    return derive_quantities(data).lambda_cap * data.Q * data.Q


def tail_sum(x: float, a1: float) -> float:
    """Upper bound for sum_{n>=2} a1 * n^-x.

    Computed as a partial sum to an adaptive cutoff M plus the integral
    majorant a1 * M^(1-x) / (x - 1), so the result always over-approximates
    the true sum (the safe direction for the strip-selection checks).  The
    cutoff is chosen so the overshoot a1 * M^-x stays below 1e-12; for
    x >= 2 (every in-package use) absolute accuracy is therefore < 1e-12.

    Raises DomainError for x <= 1 (divergent series).
    """
    if x <= 1.0:
        raise DomainError(f"tail sum diverges for exponent {x} <= 1")
    if a1 == 0.0:
        return 0.0
    cutoff = int(math.ceil((2.0 * abs(a1) * 1e12) ** (1.0 / x)))
    cutoff = min(max(cutoff, 16), _TAIL_MAX_TERMS)
    partial = math.fsum(n ** -x for n in range(2, cutoff + 1))
    return a1 * (partial + cutoff ** (1.0 - x) / (x - 1.0))


@dataclass(frozen=True)
class StripParams:
    """Abscissae of the counting rectangle: a > 2, b < -3, R = a - b.

    Construct through select_strip so the two tail-sum conditions are
    actually verified; the dataclass itself only checks the cheap shape
    invariants.
    """

    a: float
    b: float
    R: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "R", float(self.R))
        if not self.a > 2.0:
            raise InvalidStripError(f"strip needs a > 2, got a = {self.a}")
        if not self.b < -3.0:
            raise InvalidStripError(f"strip needs b < -3, got b = {self.b}")
        if self.R != self.a - self.b:
            raise InvalidStripError(f"R must equal a - b, got R = {self.R}")


def select_strip(a1: float, a: float | None = None, b: float | None = None) -> StripParams:
    """Choose (or validate) the strip abscissae for a given a1 >= 1.

    Without overrides, a is the smallest integer > 2 with
    tail_sum(a, a1) < 1/2 and b the largest integer < -3 with
    tail_sum(-b - 1, a1) < 1, matching the worked choices a1 = 1 ->
    (a, b) = (3, -4).  Overrides are accepted if they satisfy the same
    two inequalities; a violation raises InvalidStripError naming the
    failed condition.
    """
    if a1 < 1.0:
        raise ValidationError(f"a1 must be >= 1, got {a1}")

    if a is None:
        n = 3
        while tail_sum(float(n), a1) >= 0.5:
            n += 1
        a = float(n)
    else:
        a = float(a)
        if a <= 2.0:
            raise InvalidStripError(f"override a = {a} does not satisfy a > 2")
        if not tail_sum(a, a1) < 0.5:
            raise InvalidStripError(
                f"override a = {a} fails tail_sum(a, a1) < 1/2 "
                f"(got {tail_sum(a, a1)})"
            )

    if b is None:
        n = -4
        while tail_sum(float(-n - 1), a1) >= 1.0:
            n -= 1
        b = float(n)
    else:
        b = float(b)
        if b >= -3.0:
            raise InvalidStripError(f"override b = {b} does not satisfy b < -3")
        if not tail_sum(-b - 1.0, a1) < 1.0:
            raise InvalidStripError(
                f"override b = {b} fails tail_sum(-b-1, a1) < 1 "
                f"(got {tail_sum(-b - 1.0, a1)})"
            )

    return StripParams(a=a, b=b, R=a - b)


def threshold_height(data: LFunctionData) -> float:
    """max over factors of max(2|lam + conj(mu)|/lam, 2|mu|/lam).

    Every gamma-ratio bound is valid for ordinates at or above this height,
    and it is the imaginary part pinned inside all the secant arguments.
    """
    return max(
        max(
            2.0 * abs(f.lam + f.mu.conjugate()) / f.lam,
            2.0 * abs(f.mu) / f.lam,
        )
        for f in data.factors
    )


@dataclass(frozen=True)
class AdmissibleHeight:
    """Smallest height at which the counting machinery applies.

    strict_adjusted is True when the binding constraint is the strict one
    (the gamma-argument condition); in that case value carries a +1e-9
    nudge so that the returned height itself is admissible.
    """

    value: float
    binding: str
    strict_adjusted: bool

    def __float__(self) -> float:
        return self.value


def _constraints(data: LFunctionData, strip: StripParams) -> list[tuple[str, float, bool]]:
    """(name, threshold, is_strict) triples for the admissibility of T."""
    two_r = 2.0 * strip.R
    shift_max = max(2.0 * abs(f.lam + f.mu.conjugate()) / f.lam for f in data.factors)
    arg_max = max(2.0 * abs(f.mu) / f.lam for f in data.factors)
    cons = [
        ("base-window", two_r + 1.0, False),
        ("gamma-shift", two_r + shift_max, False),
    ]
    if data.k > 0:
        cons.append(("pole-window", two_r + 1.0 / (2.0 ** (1.0 / data.k) - 1.0), False))
    cons.append(("gamma-argument", two_r + arg_max, True))
    return cons


def min_admissible_height(data: LFunctionData, strip: StripParams) -> AdmissibleHeight:
    """Smallest T satisfying every admissibility constraint.

    The gamma-argument constraint is strict; when it binds, the returned
    value is the threshold plus STRICT_NUDGE and the report flags the
    adjustment.
    """
    cons = _constraints(data, strip)
    weak = [(name, val) for name, val, strict in cons if not strict]
    strict = [(name, val) for name, val, strict in cons if strict]
    name, value = max(weak, key=lambda c: c[1])
    for sname, sval in strict:
        if sval >= value:
            return AdmissibleHeight(value=sval + STRICT_NUDGE, binding=sname, strict_adjusted=True)
    return AdmissibleHeight(value=value, binding=name, strict_adjusted=False)


def require_admissible(data: LFunctionData, strip: StripParams, T: float, label: str = "T") -> None:
    """Raise AdmissibilityError naming the first constraint T violates."""
    for name, val, strict in _constraints(data, strip):
        if strict:
            ok = T > val
            rel = ">"
        else:
            ok = T >= val
            rel = ">="
        if not ok:
            raise AdmissibilityError(
                f"{label} = {T} violates the '{name}' constraint (needs {label} {rel} {val})"
            )


def main_term(data: LFunctionData, T: float) -> float:
    """Smooth zero-count term (d / 2 pi) T log(T/e) + (T / 2 pi) log(lambda Q^2)."""
    if not T > 0.0:
        raise DomainError(f"main term needs T > 0, got {T}")
    d = data.degree
    lq2 = conductor_product(data)
    return d / (2.0 * math.pi) * T * math.log(T / math.e) + T / (2.0 * math.pi) * math.log(lq2)


def load_document(obj: dict) -> tuple[LFunctionData, StripParams]:
    """Parse the CLI interchange document: datum plus optional a/b overrides."""
    data = LFunctionData.from_json_dict(obj)
    strip = select_strip(data.a1, a=obj.get("a"), b=obj.get("b"))
    return data, strip


def document_dict(data: LFunctionData, strip: StripParams) -> dict:
    """Inverse of load_document (strip recorded explicitly)."""
    doc = data.to_json_dict()
    doc["a"] = strip.a
    doc["b"] = strip.b
    return doc
