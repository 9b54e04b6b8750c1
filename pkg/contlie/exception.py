"""Exceptions raised by contlie."""

__all__ = [
    "ContlieException",
    "ContlieError",
    "ParseError",
    "ValidationError",
    "DegreeMismatch",
    "Inhomogeneous",
    "ZeroExpr",
    "OverlapOutOfRange",
    "DomainViolation",
    "SeedDegenerate",
    "NoIndependentPath",
    "ArityMismatch",
    "UnknownPair",
    "SharedMismatch",
    "DimensionMismatch",
]


class ContlieException(Exception):
    """Base class for exceptions in contlie."""


class ContlieError(ContlieException):
    """Exception for a serious error in contlie"""


class ParseError(ContlieError):
    """Raised when a document cannot be parsed.

    Parameters
    ----------
    message : str
        Description of the failure.
    line : int, optional
        1-based line of the failure, by default 1.
    column : int, optional
        1-based column of the failure, by default 1.

    Examples
    --------
    >>> from contlie.exception import ParseError
    >>> str(ParseError("unexpected token", line=3, column=7))
    'line 3, column 7: unexpected token'

    """

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class ValidationError(ContlieError):
    """Raised when a value violates a documented invariant."""


class DegreeMismatch(ContlieError):
    """Raised when degrees of different lengths or incompatible degrees meet."""


class Inhomogeneous(ContlieError):
    """Raised when the terms of an expression disagree on their degree."""


class ZeroExpr(ContlieError):
    """Raised when an operation needs a nonzero expression."""


class OverlapOutOfRange(ContlieError):
    """Raised when an overlap exceeds the degrees it is taken from."""


class DomainViolation(ContlieError):
    """Raised when an index leaves the index domain of a complex."""


class SeedDegenerate(ContlieError):
    """Raised when a relation tree is seeded with a zero expression."""


class NoIndependentPath(ContlieError):
    """Raised when a relation tree has no independent path to extract."""


class ArityMismatch(ContlieError):
    """Raised when an argument tuple does not have the generator's arity."""


class UnknownPair(ContlieError):
    """Raised when a bracket is requested for a pair with no table entry."""


class SharedMismatch(ContlieError):
    """Raised when tuples disagree on their shared entries."""


class DimensionMismatch(ContlieError):
    """Raised when a tensor does not match the dimension of its algebra."""
