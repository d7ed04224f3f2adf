"""Exception types shared across the package."""


class TraagError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TraagError):
    """Malformed graph DSL or word syntax."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class PreconditionError(TraagError):
    """An operation was called outside its stated precondition."""


class UnknownVertexError(TraagError):
    """A vertex name does not occur in the graph."""


class DuplicateVertexError(TraagError):
    """A vertex name is already taken."""


class MissingKindError(TraagError):
    """A cone construction lacks an edge kind for some base vertex."""


class SizeLimitError(TraagError):
    """An enumeration or search exceeded its configured bound."""


class UnknownEdgeError(TraagError):
    """An edge does not occur in the graph."""


class UnknownGeneratorError(TraagError):
    """A word uses a generator that is not a vertex of the graph."""


class NotUniversalError(TraagError):
    """The chosen apex vertex is not adjacent to every other vertex."""


class NotInSubgroupError(TraagError):
    """The word does not lie in the index-2 subgroup (odd apex exponent)."""


class ApexShapeError(TraagError):
    """An edge at the apex points the wrong way for the splitting hypothesis."""


class InternalDisagreementError(TraagError):
    """Two independent algorithms for the same question disagreed."""
