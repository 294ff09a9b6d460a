"""
Exception hierarchy for the verification engine.

Everything derives from ValueError so callers that only care about
"bad input" can catch a single type.
"""

from typing import Optional


class FieldError(ValueError):
    """Modulus or shape mismatch in F_p linear algebra."""


class PresentationError(ValueError):
    """A presented category, functor or structure violates one of its laws."""


class CategoryFileError(PresentationError):
    """Syntax or validation error located in a category file."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        super().__init__(f"{location}{message}")


class PreconditionError(ValueError):
    """An operation was called on data violating its stated precondition."""


class CorruptWitnessError(ValueError):
    """A fixed witness angle does not support the completions built from it."""

    def __init__(self, message: str, witness: Optional[dict] = None):
        self.witness = witness or {}
        super().__init__(message)


class InputError(ValueError):
    """Job-level input error (exit status 3)."""
