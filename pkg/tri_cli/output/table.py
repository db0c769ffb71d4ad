"""
Table Output Formatter

Formatting only - no logic
"""

from typing import Any, Dict

from tabulate import tabulate

from .pretty import render_value


def print_report(result: Dict[str, Any]) -> None:
    """Print report as table."""
    table_data = []
    for k, v in result.items():
        if k == 'violations':
            table_data.extend(['violation', violation] for violation in v)
        else:
            table_data.append([k, render_value(v)])
    print(tabulate(table_data, headers=['Field', 'Value'], tablefmt='grid', disable_numparse=True))
