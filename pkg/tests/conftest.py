"""
Pytest Configuration

Purpose: Project path and the elapsed-time report against suites.time_budget
"""

import sys
import time
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config import SettingsLoader

STARTED = pytest.StashKey[float]()


def pytest_sessionstart(session):
    session.config.stash[STARTED] = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    started = config.stash.get(STARTED, None)
    if started is None:
        return
    elapsed = time.perf_counter() - started
    budget = SettingsLoader.load().suites.time_budget
    over = elapsed > budget
    terminalreporter.write_sep(
        "-",
        f"tricalc: {elapsed:.1f}s of {budget}s budget" + (" (over)" if over else ""),
        yellow=over,
        green=not over,
    )
