"""Exception hierarchy shared by every workbench module."""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all errors raised by the workbench."""


class DslSyntaxError(WorkbenchError):
    """Malformed DSL, program or interpretation text."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 token: Optional[str] = None):
        self.line = line
        self.column = column
        self.token = token
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class FixpointVariableError(DslSyntaxError):
    """Unbound fixpoint variable or a variable occurring under negation."""


class NameCollisionError(WorkbenchError):
    """A generated fresh name already occurs in the input."""


class PreconditionError(WorkbenchError):
    """An operation was called outside its documented preconditions."""


class ResourceLimitError(WorkbenchError):
    """A configured resource cap was exceeded; the computation gave up."""


class PolarityError(WorkbenchError):
    """A definer occurs with a polarity that Ackermann substitution cannot handle."""


class SynthesisError(WorkbenchError):
    """A synthesised program failed its own verification."""


class VerificationError(WorkbenchError):
    """A computed artifact failed the post-condition check."""


class NotFoundError(WorkbenchError):
    """Lookup of an unknown registry entry."""
