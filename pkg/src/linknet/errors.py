"""Exception hierarchy for the linknet package.

Everything raised deliberately by the library derives from LinknetError, so
callers (notably the CLI) can separate data problems from programming errors.
"""


class LinknetError(Exception):
    """Base class for all linknet errors."""


class IncompatibleModes(LinknetError):
    """Node sets of two networks (or a vector and a network) do not line up."""


class ExplosionAborted(LinknetError):
    """A multiplication was refused because its predicted cost is too high."""

    def __init__(self, predicted: int, limit: int):
        self.predicted = predicted
        self.limit = limit
        super().__init__(
            f"multiplication aborted: {predicted} predicted products "
            f"exceed the guard limit of {limit}"
        )


class NotOneMode(LinknetError):
    """Operation requires a one-mode (square, shared node set) network."""


class NotTwoMode(LinknetError):
    """Operation requires a two-mode network."""


class NotSymmetric(LinknetError):
    """Network is not symmetric within tolerance where symmetry is required."""


class NotBinary(LinknetError):
    """Operation is defined only for binary (all weights 1) networks."""


class DomainError(LinknetError):
    """A value lies outside the mathematical domain of a transform."""


class CompatibilityError(LinknetError):
    """A loaded vector does not match the node set it was bound to."""


class ParseError(LinknetError):
    """Malformed Pajek input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadVertexCount(ParseError):
    """Vertex counts in a *vertices header are inconsistent."""


class IndexOutOfRange(ParseError):
    """A vertex or link index falls outside the declared range."""
