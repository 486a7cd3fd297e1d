"""Exception types shared across the package."""


class FormatError(ValueError):
    """Malformed text input (vectors, cycle notation, code or PD-set files)."""

    def __init__(self, message: str, lineno: int | None = None) -> None:
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class EmptyCodeError(ValueError):
    """Generator rows span only the zero vector."""


class CapExceededError(RuntimeError):
    """An exhaustive enumeration would exceed its configured size cap."""


class ConfigurationError(RuntimeError):
    """A requested operation is not valid for the given code."""
