"""
Output Formatters - Formatting only, no logic
"""

from . import json, pretty, table


def formatter(name: str):
    """Formatter module for an --output-format value."""
    return {'json': json, 'table': table}.get(name, pretty)
