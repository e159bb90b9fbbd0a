class SymcharError(Exception):
    """Base class for errors raised by this package."""


class TruncationError(SymcharError, ArithmeticError):
    """A coefficient was requested outside a series' guaranteed-correct window.

    Re-run the computation with a deeper truncation order.
    """


class NonInvertibleError(SymcharError, ArithmeticError):
    pass


class NonExactDivisionError(SymcharError, ArithmeticError):
    """An integrality-preserving division left a remainder (an internal bug)."""


class CapExceededError(SymcharError, ValueError):
    """An enumeration was asked to run above its configured size cap."""


class ShapeError(SymcharError, ValueError):
    """Inputs of incompatible sizes or invalid combinatorial data."""
