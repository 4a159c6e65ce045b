"""Exception hierarchy and warnings shared across the package."""


class ZeroboundError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ZeroboundError, ValueError):
    """Input data violates a structural invariant (bad functional-equation datum)."""


class DomainError(ZeroboundError, ValueError):
    """Arguments lie outside the mathematical domain of a formula."""


class AdmissibilityError(DomainError):
    """A height parameter is below the admissible threshold of a bound."""


class InvalidStripError(ValidationError):
    """A user-supplied strip abscissa fails its defining tail-sum inequality."""


class ZeroFileError(ZeroboundError, ValueError):
    """A zero-ordinate file could not be parsed."""


class BoundaryWarning(UserWarning):
    """A pre-ceiling value sits suspiciously close to an integer boundary."""
