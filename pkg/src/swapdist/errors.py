"""Exception hierarchy shared across the package."""


class SwapDistError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(SwapDistError):
    """The two graphs do not realize the same degree sequence."""


class NotGraphical(SwapDistError):
    """The degree sequence admits no simple realization."""


class NotBalanced(SwapDistError):
    """A red-blue graph has a vertex with unequal red and blue degrees."""


class NoEvenRepeat(SwapDistError):
    """The circuit has no vertex repeated at even arc-distance, so it cannot split."""


class NotElementary(SwapDistError):
    """The circuit violates the elementary conditions required by the caller."""


class NotKissing(SwapDistError):
    """The two cycles do not form a resolvable kissing pair at the given vertex."""


class DifferenceMismatch(SwapDistError):
    """The supplied circuit(s) do not cover the symmetric difference exactly."""


class BudgetExceeded(SwapDistError):
    """The instance is too large for the configured exhaustive-search budget."""


class CapExceeded(SwapDistError):
    """Enumeration would produce more objects than the configured cap."""


class ParseError(SwapDistError):
    """An input file could not be parsed; carries position information."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        base = super().__str__()
        if self.line:
            return f"line {self.line}, column {self.column}: {base}"
        return base
