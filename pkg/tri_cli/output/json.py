"""
JSON Output Formatter

Formatting only - no logic
"""

import json
from typing import Any, Dict


def print_report(result: Dict[str, Any]) -> None:
    """Print report as JSON."""
    print(json.dumps(result, indent=2))
