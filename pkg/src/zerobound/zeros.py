"""Zero-ordinate ingestion and verification against the explicit bounds.

Zero tables list the positive imaginary parts of (critical-line) zeros,
one decimal per line, multiplicity by repetition; nothing here computes or
certifies zeros.  Counting respects half-open windows (T0, T]: the lower
endpoint is excluded, the upper included.  A count for the reflected
window (-T, -T0) reuses the same machinery, since conjugation carries one
zero set to the other.
"""

from __future__ import annotations

import os
from bisect import bisect_right
from dataclasses import dataclass

from .bounds import total_count_error, window_coefficients
from .errors import DomainError, ZeroFileError
from .selberg import LFunctionData, StripParams, main_term


@dataclass(frozen=True)
class ZeroList:
    """Sorted positive zero ordinates with a provenance label."""

    ordinates: tuple[float, ...]
    source_label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "ordinates", tuple(float(x) for x in self.ordinates))
        if any(x <= 0.0 for x in self.ordinates):
            raise ZeroFileError("all ordinates must be positive")
        if any(a > b for a, b in zip(self.ordinates, self.ordinates[1:])):
            raise ZeroFileError("ordinates must be sorted ascending")

    def __len__(self) -> int:
        return len(self.ordinates)


def load_zeros(path: str | os.PathLike) -> ZeroList:
    """Read a zero-ordinate text file.

    One decimal ordinate per line; lines starting with '#' and blank lines
    are skipped; LF or CRLF both fine.  Unparsable or non-positive entries
    raise ZeroFileError with the offending line number.  The result is
    sorted ascending (ties kept).
    """
    ordinates = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                value = float(line)
            except ValueError:
                raise ZeroFileError(f"{path}: line {lineno}: cannot parse {line!r}") from None
            if not value > 0.0:
                raise ZeroFileError(f"{path}: line {lineno}: non-positive ordinate {value}")
            ordinates.append(value)
    ordinates.sort()
    return ZeroList(ordinates=tuple(ordinates), source_label=str(path))


def count_window(zeros: ZeroList, T0: float, T: float) -> int:
    """Number of ordinates in the half-open window (T0, T]."""
    if not T > T0:
        raise DomainError(f"needs T > T0, got T = {T} <= T0 = {T0}")
    return bisect_right(zeros.ordinates, T) - bisect_right(zeros.ordinates, T0)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one zero table against both inequalities."""

    count: int
    main_term: float
    deviation: float
    r_total: float
    coeff_bound: float
    pass_lemma: bool
    pass_theorem: bool

    def to_json_dict(self) -> dict:
        return {
            "count": self.count,
            "main_term": self.main_term,
            "deviation": self.deviation,
            "r_total": self.r_total,
            "coeff_bound": self.coeff_bound,
            "pass_lemma": self.pass_lemma,
            "pass_theorem": self.pass_theorem,
        }


def check_bound(
    data: LFunctionData,
    strip: StripParams,
    zeros: ZeroList,
    T0: float,
    T: float,
) -> VerificationReport:
    """Compare the observed window count against both explicit bounds.

    pass_lemma checks |count - main term| < total_count_error(T0, T);
    pass_theorem checks the flattened c1 log T + c2 + c3/T form.  T0 must
    be admissible (the error names the binding constraint) and T > T0.
    """
    count = count_window(zeros, T0, T)
    smooth = main_term(data, T)
    deviation = abs(count - smooth)
    r_total = total_count_error(data, strip, T0, T)
    coeff_bound = window_coefficients(data, strip, T0).evaluate(T)
    return VerificationReport(
        count=count,
        main_term=smooth,
        deviation=deviation,
        r_total=r_total,
        coeff_bound=coeff_bound,
        pass_lemma=deviation < r_total,
        pass_theorem=deviation < coeff_bound,
    )
