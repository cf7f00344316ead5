"""
Settings Module

Loads solver limits and CLI defaults from config/defaults.json.
Missing keys fall back to built-in defaults; bad values raise ValueError.
"""

import json
from copy import deepcopy
from pathlib import Path
from typing import Dict, Optional

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "defaults.json"

BUILTIN_DEFAULTS = {
    "exact_max_vertices": 30,
    "bruteforce_contract_max_vertices": 16,
    "bruteforce_delete_max_vertices": 20,
    "bruteforce_max_candidates": 3_000_000,
    "wp2sat_max_vars": 20,
    "bipartite_max_d": 3,
    "log_level": "INFO",
    "suite_defaults": {},
}

_INTEGER_KEYS = (
    "exact_max_vertices",
    "bruteforce_contract_max_vertices",
    "bruteforce_delete_max_vertices",
    "bruteforce_max_candidates",
    "wp2sat_max_vars",
    "bipartite_max_d",
)


class SolverSettings:
    """Validated view over the JSON configuration."""

    def __init__(self, values: Optional[Dict] = None):
        merged = deepcopy(BUILTIN_DEFAULTS)
        merged.update(values or {})

        for key in _INTEGER_KEYS:
            value = merged[key]
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"Setting '{key}' must be a non-negative integer, got {value!r}")

        if merged["bipartite_max_d"] < 1:
            raise ValueError("Setting 'bipartite_max_d' must be at least 1")

        if str(merged["log_level"]).upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level: {merged['log_level']}")

        self.values = merged

    @classmethod
    def from_json(cls, path=None):
        """
        Load settings from a JSON file.

        Args:
            path (str|Path): Config file; defaults to config/defaults.json

        Returns:
            SolverSettings: Validated settings
        """
        config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
        if not config_path.exists():
            if path is not None:
                raise ValueError(f"Config file not found: {config_path}")
            return cls()

        with open(config_path, "r", encoding="utf-8") as handle:
            values = json.load(handle)
        if not isinstance(values, dict):
            raise ValueError(f"Config file {config_path} must contain a JSON object")
        return cls(values)

    def __getattr__(self, key):
        values = self.__dict__.get("values", {})
        if key in values:
            return values[key]
        raise AttributeError(key)

    def suite_defaults(self, suite: str) -> Dict:
        """Seed/count/max_n defaults for a verify suite (empty dict if unset)."""
        return dict(self.values.get("suite_defaults", {}).get(suite, {}))

    def solver_limits(self) -> Dict:
        """Keyword arguments accepted by the brute-force blocker solver."""
        return {
            "exact_max_vertices": self.exact_max_vertices,
            "contract_max_vertices": self.bruteforce_contract_max_vertices,
            "delete_max_vertices": self.bruteforce_delete_max_vertices,
            "max_candidates": self.bruteforce_max_candidates,
        }
