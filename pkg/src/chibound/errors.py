"""Exception types shared across the toolkit.

Every cap is an explicit knob: exceeding one raises SizeCapError rather than
silently degrading an exact answer to an approximation.
"""


class ChiboundError(Exception):
    """Base class for all toolkit errors."""


class ParseError(ChiboundError):
    """Malformed graph6/digraph6/JSON input. Carries the byte offset when known."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class ValidationError(ChiboundError):
    """Structurally invalid object: loops, duplicate edges, bad certificates."""


class ParameterError(ChiboundError):
    """Infeasible or inconsistent parameters for a generator or operation."""


class SizeCapError(ChiboundError):
    """Input exceeds the configured exact-computation cap."""


class BudgetError(ChiboundError):
    """A bounded search exhausted its node budget before reaching an answer."""


class WalkLoopError(ChiboundError):
    """A directed-walk power would create a loop; carries the vertex and walk."""

    def __init__(self, vertex, walk):
        super().__init__(
            f"closed directed walk of length {len(walk) - 1} at vertex {vertex}: {walk}"
        )
        self.vertex = vertex
        self.walk = tuple(walk)
