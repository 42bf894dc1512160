"""Exception hierarchy shared across the package."""


class BsGraphError(Exception):
    """Base class for all errors raised by this package."""


class WordSyntaxError(BsGraphError):
    """Malformed word text (bad character, negative exponent, ...)."""


class NotAPrefix(BsGraphError):
    """A word was required to be a left divisor of another but is not."""


class DuplicateId(BsGraphError):
    """A vertex or edge name was declared twice."""


class UnknownVertex(BsGraphError):
    """An edge refers to a vertex that was never declared."""


class UnknownEdge(BsGraphError):
    """A path or square refers to an edge that does not exist."""


class BadColour(BsGraphError):
    """An edge colour token is not one of a/b (or 1/2 in grid mode)."""


class NotComposable(BsGraphError):
    """Consecutive edges do not meet (s of one is not r of the next)."""

    def __init__(self, index, message):
        super().__init__(message)
        self.index = index


class ColourMismatch(BsGraphError):
    """A square slot was filled with an edge of the wrong colour."""


class JunctionMismatch(BsGraphError):
    """A square's edge images do not meet at the required vertices."""


class NotCovered(BsGraphError):
    """A boundary path has no square in the collection; the collection
    is not complete for this graph."""

    def __init__(self, boundary, message):
        super().__init__(message)
        self.boundary = tuple(boundary)


class Conflict(BsGraphError):
    """Constraint propagation derived two different images for one
    edge or vertex; witnesses a completeness violation."""


class DegreeMismatch(BsGraphError):
    """A factorization was requested at degrees that do not multiply
    to the morphism's degree."""


class PreconditionViolated(BsGraphError):
    """An operation's stated precondition does not hold."""


class ResourceLimit(BsGraphError):
    """A model graph or enumeration would exceed the configured size bound."""


class FixtureSyntaxError(BsGraphError):
    """A fixture file line could not be parsed."""
