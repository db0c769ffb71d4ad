"""
Command Error Handler

Purpose: Map calculator errors to exit codes and log them by severity
"""

from typing import Any, Dict, List
import logging
import sys
from enum import Enum

from core import DocumentError, TrisectionCalcError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_DOCUMENT = 2


class ErrorSeverity(Enum):
    """Error severity levels"""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class CommandErrorHandler:
    """
    Command Error Handler

    Document problems exit 2, invariant violations and every other failure exit 1.
    """

    def __init__(self, verbose: bool = False, stream=None):
        self.verbose = verbose
        self.stream = stream
        self.error_history: List[Dict[str, Any]] = []

    @staticmethod
    def classify(error: BaseException) -> ErrorSeverity:
        if isinstance(error, DocumentError):
            return ErrorSeverity.LOW
        if isinstance(error, TrisectionCalcError):
            return ErrorSeverity.MEDIUM
        return ErrorSeverity.HIGH

    @staticmethod
    def exit_code(error: BaseException) -> int:
        if isinstance(error, DocumentError):
            return EXIT_DOCUMENT
        return EXIT_VIOLATION

    def handle_error(self, command: str, error: BaseException) -> int:
        """
        Report `error` raised by `command`.

        Returns:
            Process exit code
        """
        severity = self.classify(error)
        log_level = {
            ErrorSeverity.LOW: logging.DEBUG,
            ErrorSeverity.MEDIUM: logging.INFO,
            ErrorSeverity.HIGH: logging.ERROR,
            ErrorSeverity.CRITICAL: logging.CRITICAL,
        }[severity]
        logger.log(log_level, f"Error in {command}: {error}", exc_info=self.verbose)

        code = self.exit_code(error)
        self.error_history.append({
            "command": command,
            "error_type": type(error).__name__,
            "error_message": str(error),
            "severity": severity.value,
            "exit_code": code,
        })
        print(f"ERROR: {error}", file=self.stream or sys.stderr)
        for violation in getattr(error, "violations", [])[1:]:
            print(f"  - {violation}", file=self.stream or sys.stderr)
        return code

    def get_error_summary(self) -> Dict[str, Any]:
        """Get error summary."""
        counts: Dict[str, int] = {}
        for entry in self.error_history:
            counts[entry["severity"]] = counts.get(entry["severity"], 0) + 1
        return {
            "total_errors": len(self.error_history),
            "recent_errors": self.error_history[-10:],
            "error_by_severity": counts,
        }
