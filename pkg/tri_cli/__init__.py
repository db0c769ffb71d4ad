"""
tricalc - Trisection Calculator CLI

Command-line interface over the core, openbook, trisection, gluing and
lefschetz packages. Documents are JSON; reports are `name = value` lines.
"""

__version__ = "1.0.0"
