"""
Pretty Output Formatter

Formatting only - no logic
"""

from typing import Any, Dict


def render_value(value: Any) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render_value(v) for v in value) + "]"
    return str(value)


def print_report(result: Dict[str, Any]) -> None:
    """Print report as `name = value` lines."""
    for k, v in result.items():
        if k == 'violations':
            for violation in v:
                print(f"violation = {violation}")
        else:
            print(f"{k} = {render_value(v)}")
