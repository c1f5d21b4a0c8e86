"""Exception hierarchy, one class per failure category the CLI maps to an exit code."""


class GraphFiltError(Exception):
    """Base class for all graphfilt errors."""


class SpecError(GraphFiltError):
    """Invalid or degenerate design specification (CLI exit 2)."""


class DomainError(GraphFiltError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class CompositionError(GraphFiltError):
    """Pole/zero multiset could not be composed into a real rational response."""


class ParseError(GraphFiltError):
    """Unreadable or malformed input file (CLI exit 3)."""


class DimensionError(GraphFiltError):
    """Mismatched graph/signal/filter dimensions (CLI exit 4)."""


class StabilityError(GraphFiltError):
    """Numerically unstable filter: pole on or near the real axis (CLI exit 5)."""
