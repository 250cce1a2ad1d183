"""Exception types shared by the library and the CLI."""


class ClosureLabError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(ClosureLabError):
    """Operands live in ambient rings with different variable counts."""


class InstanceTooLargeError(ClosureLabError):
    """A configured resource cap was exceeded; the computation is abandoned
    rather than silently truncated."""


class PreconditionError(ClosureLabError):
    """An operation was invoked on inputs that violate its contract."""


class InvariantViolationError(ClosureLabError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class IdealSyntaxError(ClosureLabError):
    """A polynomial expression or ideal file failed to parse."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ConfigError(ClosureLabError):
    """A configuration file or flag carries an invalid value."""
