"""Exception hierarchy for ore-sra.

Every error raised by the library derives from OreAlgebraError. The CLI maps
the subclasses onto process exit codes (see ``exit_code_for``).
"""

from typing import Optional


class OreAlgebraError(Exception):
    """Base exception for all library errors."""

    exit_code: int = 2

    def __init__(self, message: str, code: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.code = code


class FieldError(OreAlgebraError):
    """Finite field construction or arithmetic error."""
    pass


class ParameterMismatchError(OreAlgebraError):
    """Operands belong to different fields, group algebras or contexts."""
    pass


class PreconditionError(OreAlgebraError):
    """An operation was called outside of its domain."""
    pass


class ParseError(OreAlgebraError):
    """Malformed parameter expression."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message, code="parse")
        self.position = position


class ResourceBoundError(OreAlgebraError):
    """A configured degree, word-length or search bound was exceeded."""

    exit_code = 3


class CheckFailure(OreAlgebraError):
    """A claimed identity does not hold."""

    exit_code = 1


def exit_code_for(error: BaseException) -> int:
    """Map an exception onto a CLI exit code.

    Args:
        error: Exception raised while running a job

    Returns:
        0 is never returned; 1 for failed checks, 2 for usage and
        precondition errors, 3 for exceeded resource bounds
    """
    if isinstance(error, OreAlgebraError):
        return error.exit_code
    return 1
