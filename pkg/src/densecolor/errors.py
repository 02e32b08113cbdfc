"""Shared exception types."""


class GraphFormatError(ValueError):
    """Raised when a graph file/string cannot be parsed."""


class BoundExceededError(ValueError):
    """Raised when a graph is too large for an exhaustive computation."""


class HypothesisError(ValueError):
    """Raised when an operation refuses to run because a precondition fails."""


class FalsificationError(AssertionError):
    """A verified theorem conclusion failed while its hypotheses held.

    This is a red alert, never swallowed: it carries enough state to
    reproduce the instance in isolation.
    """

    def __init__(self, message: str, state: dict | None = None):
        super().__init__(message)
        self.state = state or {}


class DecompositionError(ValueError):
    """The clique-decomposition structure is unattainable; hypotheses were off."""
