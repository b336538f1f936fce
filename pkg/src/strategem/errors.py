"""Exception types shared across the toolkit."""


class StrategemError(Exception):
    """Base class for every toolkit error."""


class MixedScaleError(StrategemError):
    """Strategy profiles mix binary, real, and interval value kinds."""


class DimensionError(StrategemError):
    """A vector or matrix has the wrong length or shape."""


class LabelError(StrategemError):
    """Unknown, duplicate, or mismatched strategy labels."""


class RangeError(StrategemError):
    """A parameter or probability lies outside its permitted range."""


class DegenerateError(StrategemError):
    """The operation is undefined for the given degenerate input."""


class EmptyOperandError(StrategemError):
    """Interval arithmetic received the empty interval as an operand."""


class ScaleError(StrategemError):
    """A payoff rule was applied to profiles of an incompatible scale."""


class ConfigError(StrategemError):
    """Invalid entropy-scoring configuration."""


class TimelineError(StrategemError):
    """A timeline is missing or cannot be applied to the scenario."""


class StepError(StrategemError):
    """Grid step incompatible with the interval widths being searched."""


class SizeError(StrategemError):
    """Exhaustive grid search requested on a matrix that is too large."""


class SolverError(StrategemError):
    """The internal linear-program solver failed to converge."""


class DocumentError(StrategemError):
    """A scenario or result document is malformed."""
