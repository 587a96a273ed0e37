"""Exception hierarchy shared across the toolkit."""


class VexError(Exception):
    """Base class for all toolkit errors."""


class MalformedInputError(VexError):
    """Structurally invalid data (dimension mismatch, bad schema, ...)."""


class DimensionMismatchError(MalformedInputError):
    pass


class UnsupportedClassError(VexError):
    """The operation is exact-only and this input leaves the supported class."""


class NotInSetError(VexError):
    """Normal cone queried at a point outside the set (the empty-cone convention)."""


class NotInGraphError(VexError):
    """Coderivative queried at a pair outside the graph."""


class EmptyWindowError(VexError):
    """Infimum requested over an empty window."""


class ExactnessError(UnsupportedClassError):
    """The exact value exists but is irrational; only comparisons are offered."""
