"""Exception hierarchy shared by the package."""


class G2GradingError(Exception):
    """Base class for every error raised by this package."""


class InvalidGroupError(G2GradingError, ValueError):
    pass


class DomainError(G2GradingError, ValueError):
    """Arguments live in incompatible spaces (groups, ambients, dimensions)."""


class CapacityError(G2GradingError):
    """A brute-force enumeration was asked to go beyond its size bound."""


class DescriptorError(G2GradingError, ValueError):
    """A grading descriptor violates one of its parameter constraints."""


class InconsistencyError(G2GradingError):
    """An internal algebraic invariant failed; indicates a bug, never bad input."""


class TableInconsistencyError(InconsistencyError):
    def __init__(self, cell, expected, got):
        self.cell = cell
        self.expected = expected
        self.got = got
        super().__init__(f"table cell {cell[0]}*{cell[1]}: expected {expected}, got {got}")
