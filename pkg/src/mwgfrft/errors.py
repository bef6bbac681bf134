"""Exception taxonomy shared by all modules."""


class Error(Exception):
    """Base class for all library errors."""


class InvalidParameterError(Error):
    """A scalar argument is out of its documented range."""


class InvalidGraphError(Error):
    """A graph violates its structural invariants (symmetry, weights, ...)."""


class InvalidMatrixError(Error):
    """A matrix argument is not of the required form (e.g. not symmetric)."""


class ShapeError(Error):
    """Dimension mismatch between operands."""


class IndexRangeError(Error):
    """A vertex or frequency index is outside its valid range."""


class FrameConditionError(Error):
    """The window bank violates the frame condition (zero DC mass or
    a nonpositive per-vertex normalizer), so stable inversion is impossible."""


class FormatError(Error):
    """A file could not be parsed under its documented format."""
