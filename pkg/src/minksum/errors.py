"""Exception types shared across the package."""


class MinksumError(Exception):
    """Base class for all library errors."""


class DomainError(MinksumError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PreconditionError(MinksumError, ValueError):
    """A documented precondition of an operation does not hold."""


class StructureError(MinksumError, ValueError):
    """A family lacks the structure an operation relies on."""


class CapabilityError(MinksumError):
    """The requested computation exceeds a configured budget.

    ``stage`` names the computation that was refused so callers can report it.
    """

    def __init__(self, message: str, stage: str = ""):
        super().__init__(message)
        self.stage = stage


class InvariantError(MinksumError, RuntimeError):
    """An internal invariant guaranteed by theory was violated."""
