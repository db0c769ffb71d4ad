"""
Error Mapping

Purpose: One exception hierarchy for every calculator module
"""

from typing import Any, List, Optional, Sequence


class TrisectionCalcError(Exception):
    """Base exception for calculator errors."""
    pass


class InvalidSurfaceError(TrisectionCalcError, ValueError):
    """Negative genus or boundary count."""
    pass


class HomologyMismatchError(TrisectionCalcError, ValueError):
    """Homology class length does not match the surface's H1 rank."""
    pass


class InvalidOpenBookError(TrisectionCalcError, ValueError):
    """Open book violates its structural invariants."""
    pass


class StabilizationError(TrisectionCalcError, ValueError):
    """A stabilization move is not applicable."""
    pass


class InvalidTrisectionError(TrisectionCalcError):
    """
    Trisection parameters violate one or more invariants.

    Carries the violation list and, when available, the derived report.
    """

    def __init__(self, violations: Sequence[str], report: Optional[Any] = None):
        self.violations: List[str] = list(violations)
        self.report = report
        super().__init__("; ".join(self.violations) or "invalid trisection")


class IncompatibleOpenBooksError(TrisectionCalcError):
    """Paired boundary open books do not match."""
    pass


class GluingError(TrisectionCalcError, ValueError):
    """Gluing request is malformed (pairing, circle counts)."""
    pass


class OracleMismatchError(TrisectionCalcError):
    """An independent arithmetic oracle disagrees with a derived value."""
    pass


class InvalidFibrationError(TrisectionCalcError, ValueError):
    """Lefschetz fibration violates its invariants."""
    pass


class DocumentError(TrisectionCalcError):
    """Base class for document parse errors."""
    pass


class DocumentSyntaxError(DocumentError):
    """Document is not well-formed JSON."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"syntax error at line {line}, column {column}: {message}")


class SchemaError(DocumentError):
    """Document is well-formed but violates the schema at a key."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"schema error at '{key}': {message}")
