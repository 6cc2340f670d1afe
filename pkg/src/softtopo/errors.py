"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class SoftTopoError(Exception):
    """Base class for all errors raised by softtopo."""


class ValidationError(SoftTopoError, ValueError):
    """Input data does not satisfy a structural requirement."""

    def __init__(self, message: str, label: str | None = None):
        super().__init__(message)
        self.label = label


class MissingParameter(ValidationError):
    pass


class DuplicateParameter(ValidationError):
    pass


class UnknownParameter(ValidationError):
    pass


class UnknownPoint(ValidationError):
    pass


class ContextMismatch(ValidationError):
    pass


class NotATopology(ValidationError):
    """Raised by constructors that require a valid (soft) topology.

    ``violation`` carries the same witness that the verdict-style checkers
    return.
    """

    def __init__(self, message: str, violation=None):
        super().__init__(message)
        self.violation = violation


class NotASubfamily(ValidationError):
    pass


class NotABase(ValidationError):
    pass


class SizeGuardExceeded(SoftTopoError):
    pass


class BoundExceeded(SoftTopoError):
    pass


class UnknownTheorem(SoftTopoError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class NotFound(SoftTopoError):
    """A converse search exhausted its bounds without a counterexample."""


class ParseError(SoftTopoError):
    """Malformed JSON; carries the 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class SchemaError(ValidationError):
    """Well-formed JSON that does not follow the document schema.

    ``label`` names the offending field.
    """

    @property
    def field(self) -> str | None:
        return self.label
