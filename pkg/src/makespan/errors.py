"""Exception types shared across the library."""


class MakespanError(Exception):
    """Base class for all errors raised by this package."""


class NegativeValueError(MakespanError):
    """A support value is negative or not finite."""


class NonPositiveProbabilityError(MakespanError):
    """A probability is zero, negative, or not finite."""


class MassNotOneError(MakespanError):
    """Probabilities do not sum to one within the applicable tolerance."""


class InvalidRangeError(MakespanError):
    """Uniform range is empty, inverted, negative, or not finite."""


class ZeroBinsError(MakespanError):
    """Bin count for a discretized uniform is not a positive integer."""


class InvalidEpsilonError(MakespanError):
    """Accuracy parameter outside the open interval (0, 1)."""


class SupportCapExceededError(MakespanError):
    """An exact composition would exceed the configured support cap.

    Signals infeasibility of the exact route, not a bug; callers may
    retry with a larger cap or switch to the approximation.
    """


class NotCompositeError(MakespanError):
    """Operation requires a sequence or parallel node at the root."""


class InvalidSpecError(MakespanError):
    """Generator specification is inconsistent or out of range."""


class PlanParseError(MakespanError):
    """Plan file could not be read or is not valid JSON."""


class PlanSchemaError(MakespanError):
    """Plan document does not match the documented schema."""
