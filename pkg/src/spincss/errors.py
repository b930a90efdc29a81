"""Exception types shared across the package."""


class SpinCssError(Exception):
    """Base class for domain errors (capacity limits, bad structures)."""


class CapacityError(SpinCssError):
    """Input exceeds a hard desk-scale enumeration ceiling."""


class IsolatedVertexError(SpinCssError):
    """A vertex belongs to no edge, so the dual would contain an empty edge."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is isolated (belongs to no edge)")


class NotThreeColorableError(SpinCssError):
    """The face set of a lattice admits no proper 3-coloring."""


class NonUniformCouplingError(SpinCssError):
    """An operation requiring one shared positive coupling got mixed ones."""


class ModelFormatError(SpinCssError):
    """A model document failed to parse or validate.

    ``line`` and ``column`` are set for syntax errors, None for semantic ones.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
