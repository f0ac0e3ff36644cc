"""Exception hierarchy. All package errors derive from CssplabError."""


class CssplabError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(CssplabError):
    """Matrix dimensions do not admit the requested operation."""


class SingularMatrixError(CssplabError):
    """A matrix that must be invertible has rank below its dimension."""


class SelectionError(CssplabError):
    """A column selection refers to positions outside the matrix."""


class ParseError(CssplabError):
    """Malformed input text."""


class ValidationError(CssplabError):
    """Structurally invalid graph, coloring, or instance data."""


class PartialColoringError(CssplabError):
    """A color assignment does not cover every vertex."""


class EmptyEdgeSetError(CssplabError):
    """No edge can be produced (single-vertex graph)."""


class DegenerateGraphError(CssplabError):
    """Reduction input needs at least one vertex and one edge."""


class NotAColoringError(CssplabError):
    """The assignment has a monochromatic edge where a coloring is required."""


class IsAColoringError(CssplabError):
    """The assignment is a proper coloring where a non-coloring is required."""


class HypothesisMismatchError(CssplabError):
    """A selection does not satisfy the hypothesis of the requested check."""


class CombinatorialBlowupError(CssplabError):
    """Requested enumeration exceeds the configured cap."""


class ModeUnavailableError(CssplabError):
    """The requested solve mode does not apply to this input."""
