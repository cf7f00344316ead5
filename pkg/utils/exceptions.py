"""
Exceptions Module

Error hierarchy shared by the graph, solver and reduction modules.
Every error is a ValueError so callers that only know about bad input keep working.
"""


class BlockerError(ValueError):
    """Base class for every error raised by this project."""


class GraphParseError(BlockerError):
    """Raised when an edge-list or WP2SAT text cannot be parsed."""

    def __init__(self, message, line_number=None):
        """
        Args:
            message (str): What went wrong
            line_number (int): 1-based line of the offending input, if known
        """
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class VertexRangeError(BlockerError):
    """A vertex id lies outside [0, n)."""


class EdgeNotInGraphError(BlockerError):
    """An edge set refers to a pair that is not an edge of the host graph."""


class GraphClassError(BlockerError):
    """The input violates a class precondition (bipartite, chordal, connected, C3-free...)."""


class SizeGuardError(BlockerError):
    """An exponential routine was asked to run beyond its configured limit."""


class CapabilityError(BlockerError):
    """The request is well-formed but outside what the solver supports (e.g. d > 3)."""


class WitnessError(BlockerError):
    """A witness is ill-formed, over budget, non-critical, or fails re-verification."""


class PreconditionError(BlockerError):
    """A documented precondition of an operation does not hold."""
