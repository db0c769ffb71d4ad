"""
Configuration

Purpose: Calculator settings (logging, output format, property-suite sizes)
"""

from .settings_loader import (
    CONFIG_ENV_VAR,
    LoggingSettings,
    OutputSettings,
    SuiteSettings,
    CalculatorSettings,
    SettingsLoader,
)

__all__ = [
    'CONFIG_ENV_VAR',
    'LoggingSettings',
    'OutputSettings',
    'SuiteSettings',
    'CalculatorSettings',
    'SettingsLoader',
]
