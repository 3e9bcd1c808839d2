"""Exception types raised by the library."""


class AdfError(Exception):
    """Base class for all errors raised by adfsem."""


class ParseError(AdfError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class InstanceError(AdfError):
    """Instance fails validation (undeclared atom, missing or duplicate condition)."""


class PartialInterpretationError(AdfError, ValueError):
    """A total interpretation was required but some atom is unassigned."""


class DomainMismatchError(AdfError, ValueError):
    pass


class CapExceededError(AdfError):
    """A brute-force scan would exceed the configured size limit."""
