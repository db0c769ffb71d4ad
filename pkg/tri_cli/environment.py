"""
CLI Environment Checks

Checks run before any command: interpreter version and the packages the
calculator imports
"""

import logging
import sys
from typing import List

logger = logging.getLogger(__name__)


class EnvironmentChecker:
    """CLI-level environment checker."""

    def __init__(self):
        self.errors: List[str] = []
        self.warnings: List[str] = []

    def check(self) -> bool:
        """
        Run all checks.

        Returns:
            True if all checks pass, False otherwise
        """
        self.errors.clear()
        self.warnings.clear()

        self._check_python_version()
        self._check_required_modules()
        self._check_optional_modules()

        for warning in self.warnings:
            logger.warning(warning)
        return len(self.errors) == 0

    def _check_python_version(self) -> None:
        if sys.version_info < (3, 8):
            self.errors.append(
                f"Python 3.8+ required, got {sys.version_info.major}.{sys.version_info.minor}"
            )

    def _check_required_modules(self) -> None:
        required_modules = {
            'numpy': 'exact integer matrices',
            'tabulate': 'table output formatting',
        }
        for module, description in required_modules.items():
            try:
                __import__(module)
            except ImportError:
                self.errors.append(f"Required module not found: {module} ({description})")

    def _check_optional_modules(self) -> None:
        try:
            __import__('yaml')
        except ImportError:
            self.warnings.append("Optional module not found: yaml (settings file support, defaults in use)")

    def get_errors(self) -> List[str]:
        return self.errors.copy()

    def get_warnings(self) -> List[str]:
        return self.warnings.copy()
