"""Exception hierarchy shared across the package."""


class WgrassError(Exception):
    """Base class for all package-specific errors."""


class EmptyGenerators(WgrassError):
    """A lattice operation received a generator matrix with no columns."""


class DimensionMismatch(WgrassError):
    """Operands live in different ambient dimensions or have bad shapes."""


class UnsupportedType(WgrassError):
    """Requested a group type or representation outside A/B/D standard scope."""


class NonIntegralCoweight(WgrassError):
    """A coweight expected to be integral has a fractional ambient entry."""


class BadRange(WgrassError):
    """Numeric parameters outside the documented range (e.g. k not in 1..n)."""


class NonPositiveDegree(WgrassError):
    """A grading has a coordinate of non-positive degree where positivity
    is required."""


class MissingIndex(WgrassError):
    """Lookup of a subset that is not a k-element subset of {0..n}."""


class NotPositive(WgrassError):
    """Operation requires a positive grading and the input is not positive."""


class TooLarge(WgrassError):
    """Requested computation exceeds the documented size cutoff."""


class BudgetExceeded(WgrassError):
    """Requested computation exceeds the configured work budget."""


class LimitDoesNotExist(WgrassError):
    """Numerator fails divisibility while the denominator still vanishes."""


class NonInvertibleDenominator(WgrassError):
    """Series expansion needs a unit constant term and did not get one."""


class WindowTooShort(WgrassError):
    """Series window is too short to recover the numerator reliably."""


class NonPolynomialTail(WgrassError):
    """Numerator recovery left nonzero trailing coefficients."""


class CrossCheckFailed(WgrassError):
    """Two independent computations of the same quantity disagree."""
