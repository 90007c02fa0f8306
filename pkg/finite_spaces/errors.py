"""
Exceptions raised by the finite-space engine.

Everything derives from FiniteSpaceError so the CLI can map invalid input to a
single exit code. Undecided homotopy questions are never exceptions: they come
back as an INCONCLUSIVE outcome.
"""

from typing import Optional, Tuple


class FiniteSpaceError(ValueError):
    """Base class for invalid spaces, points, expressions and documents."""


class UnknownPointError(FiniteSpaceError):
    """A point label that does not belong to the space."""

    def __init__(self, label: str):
        super().__init__(f"unknown point label: {label!r}")
        self.label = label


class InvalidSpaceError(FiniteSpaceError):
    """A relation that does not define a finite T0 space."""

    def __init__(self, message: str, pair: Optional[Tuple[str, str]] = None):
        super().__init__(message)
        self.pair = pair


class ParameterError(FiniteSpaceError):
    """A constructor parameter below its minimum."""


class WedgeBasepointError(FiniteSpaceError):
    """Wedge basepoints must be all maximal or all minimal."""


class ExpressionError(FiniteSpaceError):
    """Malformed constructor expression (e.g. ``join:discrete:2,discrete:3``)."""

    def __init__(self, message: str, column: int = 0):
        super().__init__(f"{message} (column {column})")
        self.column = column


class DocumentError(FiniteSpaceError):
    """Malformed JSON document; carries the line or the field path."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.field = field
