"""Exception types shared across the package."""


class DowError(ValueError):
    """Base class for malformed double-occurrence words."""


class NotDoubleOccurrence(DowError):
    pass


class EmptyToken(DowError):
    pass


class NonPositiveSymbol(DowError):
    pass


class TracingError(AssertionError):
    """A tracing result violated a theorem (parity, consecutiveness).

    This always signals a bug in the tracer, never bad input.
    """


class CapExceeded(ValueError):
    """Refusal to run an exhaustive computation above a size cap."""


class RealizationError(ValueError):
    """Base class for refused realization requests."""


class UnrealizableByTheorem(RealizationError):
    """The requested genus range provably does not occur.

    ``reason`` is one of ``"full-range-odd"`` (no graph on 2n-1 vertices has
    range [0, n]), ``"top-singleton-odd"`` (no graph on 2n-1 vertices has
    range [n, n]), ``"above-max-genus"`` or ``"exhaustive"`` (excluded by a
    complete search at that size).
    """

    def __init__(self, message, reason):
        super().__init__(message)
        self.reason = reason


class NotKnownRealizable(RealizationError):
    """No construction is known for the request (not a proof of absence)."""


class SurveyFileError(ValueError):
    """A checkpoint file is corrupt or incomplete."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
