"""
Settings Loader (Python)

Purpose: Load and validate tricalc.yaml
"""

try:
    import yaml
except ImportError:
    yaml = None

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional
import logging
import os

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "TRICALC_CONFIG"
DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent / "tricalc.yaml"
OUTPUT_FORMATS = ("pretty", "json", "table")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class LoggingSettings:
    level: str = "WARNING"
    format: str = "%(levelname)s %(name)s: %(message)s"


@dataclass
class OutputSettings:
    default_format: str = "pretty"


@dataclass
class SuiteSettings:
    seed: int = 20240
    transvection: int = 200
    smith: int = 200
    euler_oracle: int = 1000
    stabilization: int = 500
    gluing: int = 500
    lefschetz: int = 500
    documents: int = 500
    # seconds for the whole test run; reported by tests/conftest.py
    time_budget: int = 10

    def count(self, suite: str) -> int:
        return getattr(self, suite)


@dataclass
class CalculatorSettings:
    logging: LoggingSettings = field(default_factory=LoggingSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    suites: SuiteSettings = field(default_factory=SuiteSettings)
    source: Optional[str] = None

    def validate(self) -> List[str]:
        """Problems with the loaded values; empty when usable."""
        problems = []
        if self.logging.level.upper() not in LOG_LEVELS:
            problems.append(f"logging.level '{self.logging.level}' not one of {', '.join(LOG_LEVELS)}")
        if self.output.default_format not in OUTPUT_FORMATS:
            problems.append(
                f"output.default_format '{self.output.default_format}' not one of {', '.join(OUTPUT_FORMATS)}"
            )
        for name, value in vars(self.suites).items():
            if name != "seed" and (not isinstance(value, int) or value < 1):
                problems.append(f"suites.{name} must be a positive integer, got {value!r}")
        return problems


class SettingsLoader:
    """Load tricalc.yaml; missing PyYAML or file falls back to defaults."""

    @staticmethod
    def resolve_path(explicit: Optional[str] = None) -> Path:
        """--config beats TRICALC_CONFIG beats the bundled file."""
        if explicit:
            return Path(explicit)
        from_env = os.environ.get(CONFIG_ENV_VAR)
        if from_env:
            return Path(from_env)
        return DEFAULT_CONFIG_PATH

    @staticmethod
    def load(explicit: Optional[str] = None) -> CalculatorSettings:
        return SettingsLoader.load_from_file(SettingsLoader.resolve_path(explicit))

    @staticmethod
    def load_from_file(file_path) -> CalculatorSettings:
        """Load settings from YAML file."""
        path = Path(file_path)
        try:
            content = path.read_text(encoding="utf-8")
        except OSError as e:
            logger.warning(f"Cannot read settings {path}: {e}; using defaults")
            return CalculatorSettings()
        settings = SettingsLoader.load_from_string(content)
        settings.source = str(path)
        return settings

    @staticmethod
    def load_from_string(yaml_content: str) -> CalculatorSettings:
        """Load settings from YAML string."""
        if yaml is None:
            logger.warning("PyYAML not installed; using default settings")
            return CalculatorSettings()
        try:
            data = yaml.safe_load(yaml_content) or {}
        except yaml.YAMLError as e:
            logger.warning(f"Malformed settings YAML: {e}; using defaults")
            return CalculatorSettings()
        if not isinstance(data, dict):
            logger.warning("Settings YAML is not a mapping; using defaults")
            return CalculatorSettings()
        return SettingsLoader._parse_settings(data)

    @staticmethod
    def _parse_settings(data: Dict[str, Any]) -> CalculatorSettings:
        """Parse YAML data into CalculatorSettings."""
        settings = CalculatorSettings()

        if 'logging' in data:
            logging_data = data['logging'] or {}
            settings.logging = LoggingSettings(
                level=str(logging_data.get('level', settings.logging.level)),
                format=str(logging_data.get('format', settings.logging.format)),
            )

        if 'output' in data:
            output_data = data['output'] or {}
            settings.output = OutputSettings(
                default_format=str(output_data.get('default_format', settings.output.default_format)),
            )

        if 'suites' in data:
            suites_data = data['suites'] or {}
            known = vars(SuiteSettings())
            unknown = sorted(set(suites_data) - set(known))
            if unknown:
                logger.warning(f"Ignoring unknown suite settings: {', '.join(unknown)}")
            settings.suites = SuiteSettings(**{k: v for k, v in suites_data.items() if k in known})

        problems = settings.validate()
        for problem in problems:
            logger.warning(f"Settings problem: {problem}")
        return settings
