"""
Filename: settings.py
Created Date: 2026-10-18
Description: Configuration management module.

This module handles loading and validating the application configuration
from YAML files. It provides access to configuration values and ensures
all required settings are present and valid. When no config.yaml exists the
shipped config_example.yaml supplies every default.
"""

import os
import sys
from copy import deepcopy
from typing import Any, Dict, List, Optional

import yaml
from colorama import Fore

from ..definitions import CONFIG_PATH, CONFIG_EXAMPLE_PATH
from ..utils.exceptions import ConfigError

VALID_ORACLE_MODES = ("exact", "modular")


def validate_positive_int(value, key):
    """Validate that a setting is an integer >= 1."""
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigError(
            f"Invalid value for {key}: {value!r}. Must be an integer >= 1."
        )


def validate_bool(value, key):
    """Validate that a setting is a boolean."""
    if not isinstance(value, bool):
        raise ConfigError(
            f"Invalid value for {key}: {value!r}. Must be true or false."
        )


def validate_oracle_mode(mode):
    """Validate the default jet oracle mode."""
    if mode not in VALID_ORACLE_MODES:
        raise ConfigError(
            f"Invalid oracle mode: {mode!r}. Must be one of: {', '.join(VALID_ORACLE_MODES)}"
        )


def validate_prime_bits(bits):
    """Validate the prime window [2^low, 2^high).

    Residues must fit a machine word, so high is capped at 63.
    """
    if not isinstance(bits, dict):
        raise ConfigError("oracle.primeBits must be a mapping with 'low' and 'high'.")
    low, high = bits.get("low"), bits.get("high")
    for key, value in (("low", low), ("high", high)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"oracle.primeBits.{key} must be an integer, got {value!r}.")
    if not 2 <= low < high <= 63:
        raise ConfigError(
            f"Invalid prime window 2^{low}..2^{high}. Need 2 <= low < high <= 63."
        )


def validate_seed(seed):
    """Validate the optional oracle seed."""
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
        raise ConfigError(f"oracle.seed must be an integer or empty, got {seed!r}.")


def validate_known_counts(counts):
    """Validate the survey calibration table."""
    if not isinstance(counts, dict):
        raise ConfigError("survey.knownCounts must be a mapping of bound to count.")
    for bound, count in counts.items():
        if not isinstance(bound, int) or bound < 1:
            raise ConfigError(f"Invalid survey bound in knownCounts: {bound!r}")
        if not isinstance(count, int) or count < 0:
            raise ConfigError(f"Invalid count for bound {bound}: {count!r}")


class Config:
    """Configuration management class"""

    def __init__(self, path: str = CONFIG_PATH, example_path: str = CONFIG_EXAMPLE_PATH):
        self._path = path
        self._example_path = example_path
        self._config = self._load_config()
        self._validate_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file, falling back to the example defaults"""
        source = self._path if os.path.exists(self._path) else self._example_path
        if not os.path.exists(source):
            raise ConfigError(f"Configuration file not found: {source}")

        try:
            with open(source, 'r') as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Could not parse {source}: {e}")
        if not isinstance(data, dict):
            raise ConfigError(f"{source} must hold a mapping of settings")
        return data

    def _validate_config(self):
        """Validate configuration against example config"""
        with open(self._example_path, 'r') as f:
            example_config = yaml.safe_load(f) or {}

        missing_keys = self._get_missing_keys(example_config, self._config)
        if missing_keys:
            print(
                f"{Fore.YELLOW}Missing configuration keys filled from defaults: {', '.join(missing_keys)}",
                file=sys.stderr,
            )
            for key in missing_keys:
                self.update_nested(key, deepcopy(self._lookup(example_config, key)))

        self._validate_values()

    @staticmethod
    def _lookup(data: Dict, dotted_key: str):
        current = data
        for part in dotted_key.split('.'):
            current = current[part]
        return current

    def _validate_values(self):
        """Validate configuration values"""
        logging_cfg = self._config.get("logging", {})
        for key in ("toConsole", "toFile", "debug"):
            validate_bool(logging_cfg.get(key), f"logging.{key}")

        oracle = self._config.get("oracle", {})
        validate_oracle_mode(oracle.get("mode"))
        validate_positive_int(oracle.get("primeCount"), "oracle.primeCount")
        validate_prime_bits(oracle.get("primeBits"))
        validate_seed(oracle.get("seed"))
        validate_positive_int(oracle.get("maxAttempts"), "oracle.maxAttempts")
        validate_positive_int(oracle.get("jobs"), "oracle.jobs")

        survey = self._config.get("survey", {})
        validate_positive_int(survey.get("jobs"), "survey.jobs")
        validate_positive_int(survey.get("chunkSize"), "survey.chunkSize")
        validate_known_counts(survey.get("knownCounts"))

        validate_bool(self._config.get("moduli", {}).get("requireBasisRays"), "moduli.requireBasisRays")

    def _get_missing_keys(self, example: Dict, config: Dict, prefix="") -> List[str]:
        """Recursively find missing configuration keys"""
        missing = []
        for key, value in example.items():
            full_key = f"{prefix}.{key}" if prefix else str(key)
            if key not in config:
                missing.append(full_key)
            elif isinstance(value, dict) and value and isinstance(config[key], dict):
                # knownCounts is user data, not schema
                if key == "knownCounts":
                    continue
                missing.extend(
                    self._get_missing_keys(value, config[key], full_key)
                )
        return missing

    def __getitem__(self, key):
        return self._config[key]

    def get(self, key, default=None):
        return self._config.get(key, default)

    def update_nested(self, dotted_key: str, value):
        """Update a nested config value using dot notation."""
        keys = dotted_key.split(".")
        current = self._config
        for key in keys[:-1]:
            if key not in current:
                current[key] = {}
            current = current[key]
        current[keys[-1]] = value

    def save(self):
        """Persist current config to disk."""
        with open(self._path, 'w') as f:
            yaml.dump(self._config, f, default_flow_style=False)


# Create global config instance. A broken config.yaml is kept in load_error and
# re-raised by cli.run(); the shipped defaults stand in until then.
load_error: Optional[ConfigError] = None
try:
    config = Config()
except ConfigError as e:
    load_error = e
    config = Config(path=CONFIG_EXAMPLE_PATH)
