"""Exception types shared across the package."""


class Z4KitError(Exception):
    """Base class for all z4kit errors."""


class FormatError(Z4KitError, ValueError):
    """Malformed GF2MAT / Z4CODE input.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GuardError(Z4KitError, RuntimeError):
    """An operation was refused because it exceeds a feasibility guard."""


class PreconditionError(Z4KitError, ValueError):
    """An operation was called on inputs that violate its contract."""
