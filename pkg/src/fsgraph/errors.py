"""Exception types shared across the package.

Three failure kinds are distinguished so that callers (and the CLI) can
react differently: bad input data, an illegal move on an otherwise valid
object, and a deliberate refusal to start a computation that would exceed
a configured resource cap.
"""


class FsgraphError(Exception):
    """Base class for all package-specific errors."""


class InvalidArgumentError(FsgraphError, ValueError):
    """Input data violates a precondition (bad graph, bad permutation, ...)."""


class InvalidMoveError(FsgraphError, ValueError):
    """A flip or swap was requested whose preconditions do not hold."""


class ResourceLimitError(FsgraphError, RuntimeError):
    """The requested computation would exceed a configured size cap."""
