"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class RegimeError(ValueError):
    """The requested quantity does not exist in this parameter regime."""


class BadBracket(ValueError):
    """A bracketing interval does not satisfy the required sign condition."""


class NonConvergence(RuntimeError):
    """An iterative routine exhausted its budget before reaching tolerance."""


class NonFinite(ArithmeticError):
    """A function returned NaN or infinity where a finite value is required."""
