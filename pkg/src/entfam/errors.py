"""Exception types shared across the package."""


class ArgumentError(ValueError):
    """An argument violates a documented precondition."""


class DomainError(ValueError):
    """The input is valid but lies outside the operation's mathematical domain.

    Examples: asking for a border-rank-sized decomposition of a tangent-class
    state, or for a kernel projector when the reduced state has full rank.
    """


class ResourceError(RuntimeError):
    """A configured size cap (e.g. full-tensor dimension) would be exceeded."""


class NumericalError(RuntimeError):
    """A numerical procedure failed to produce a trustworthy result."""
