"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for every error raised by lineroot."""


class InvalidInput(GraphError, ValueError):
    """The input violates an operation's precondition (empty, disconnected, ...)."""


class MalformedInput(GraphError, ValueError):
    """Text input does not follow the edge-list grammar."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotALineGraph(GraphError):
    """A simple graph has no simple root (no Krausz cover exists)."""


class NotLineGraph(GraphError):
    """A graph is not a line graph of any multigraph in the requested mode."""


class CannotLift(GraphError):
    """A line-graph isomorphism does not lift to the reconstructed roots."""


class BudgetExceeded(GraphError):
    """An exhaustive oracle was asked for more than its combinatorial budget."""


class ConstraintUnsatisfiable(GraphError):
    """Rejection sampling ran out of retries."""
