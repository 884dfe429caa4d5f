"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class RangeError(ValueError):
    """An argument exceeds the range covered by a lookup table."""


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds a configured size budget."""


class NumericalInstabilityError(ArithmeticError):
    """A floating-point result drifted too far from the nearest integer."""


class InconclusiveError(RuntimeError):
    """A verification ran out of budget before reaching a verdict."""


class InfeasibleError(RuntimeError):
    """A pruning procedure cannot reach its target window on this input."""
