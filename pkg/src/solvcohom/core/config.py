"""
Engine configuration: YAML file, built-in defaults and environment overrides.
"""

import copy
import logging
import os
from typing import Any, Optional

import yaml

from .exceptions import ConfigurationException

logger = logging.getLogger(__name__)

# environment variable -> (section, key)
ENV_OVERRIDES = {
    "SOLVCOHOM_SCAN_BUDGET": ("massey", "scan_budget"),
    "SOLVCOHOM_GOLDEN_WORKERS": ("golden", "workers"),
    "SOLVCOHOM_LOG_LEVEL": ("logging", "level"),
}

DEFAULT_CONFIG_PATH = os.path.join("config", "solvcohom.yaml")

_INTEGER_KEYS = {
    ("massey", "scan_budget"),
    ("massey", "max_total_degree"),
    ("golden", "workers"),
}


class EngineConfig:
    """Configuration manager for the cohomology pipeline"""

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration manager

        Args:
            config_path: Path to YAML configuration file; defaults to
                config/solvcohom.yaml when that file exists
        """
        if config_path is None and os.path.exists(DEFAULT_CONFIG_PATH):
            config_path = DEFAULT_CONFIG_PATH
        self.config_path = config_path
        self.config = self._load_config()
        self._apply_environment()
        self._validate()

    def _load_config(self) -> dict[str, Any]:
        """Load configuration from YAML file on top of the defaults"""
        config = self._get_default_config()
        if not self.config_path or not os.path.exists(self.config_path):
            if self.config_path:
                logger.warning(f"Config file {self.config_path} not found, using defaults")
            return config

        try:
            with open(self.config_path, encoding="utf-8") as f:
                loaded = yaml.safe_load(f) or {}
        except Exception as e:
            logger.warning(f"Failed to load config from {self.config_path}: {e}")
            return config

        for section, values in loaded.items():
            if isinstance(values, dict):
                config.setdefault(section, {}).update(values)
            else:
                config[section] = values
        return config

    def _get_default_config(self) -> dict[str, Any]:
        """Get default configuration"""
        return copy.deepcopy(
            {
                "massey": {
                    "scan_budget": 4000,
                    "max_total_degree": 4,
                },
                "golden": {
                    "workers": 4,
                },
                "output": {
                    "format": "text",
                },
                "logging": {
                    "level": "WARNING",
                },
            }
        )

    def _apply_environment(self) -> None:
        for variable, (section, key) in ENV_OVERRIDES.items():
            value = os.getenv(variable)
            if value is not None:
                logger.debug(f"{variable} overrides {section}.{key}")
                self.config.setdefault(section, {})[key] = value

    def _validate(self) -> None:
        for section, key in _INTEGER_KEYS:
            raw = self.config.get(section, {}).get(key)
            try:
                value = int(raw)
            except (TypeError, ValueError):
                raise ConfigurationException(
                    f"{section}.{key}", raw, "expected an integer"
                ) from None
            if value < 0:
                raise ConfigurationException(
                    f"{section}.{key}", raw, "must not be negative"
                )
            self.config[section][key] = value

        output_format = self.config.get("output", {}).get("format")
        if output_format not in ("text", "json", "latex"):
            raise ConfigurationException(
                "output.format", output_format, "expected text, json or latex"
            )

    @property
    def scan_budget(self) -> int:
        return self.config["massey"]["scan_budget"]

    @property
    def max_total_degree(self) -> int:
        return self.config["massey"]["max_total_degree"]

    @property
    def golden_workers(self) -> int:
        return max(1, self.config["golden"]["workers"])

    @property
    def output_format(self) -> str:
        return self.config["output"]["format"]

    @property
    def log_level(self) -> str:
        return str(self.config.get("logging", {}).get("level", "WARNING"))
