import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

import yaml

from .series_core import MAX_ORDER

logger = logging.getLogger(__name__)

BUNDLED_CONFIG = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config.yaml")

DEFAULTS: Dict[str, Dict[str, Any]] = {
    "series": {"order": 128, "max_depth": 3, "cauchy_radius": 0.98},
    "solver": {"tol": 1e-12},
    "verify": {"seed": 42, "trials": 200, "boundary_offset": 1e-9, "comparison_tol": 1e-12},
    "output": {"schema_version": "1"},
}


@dataclass(frozen=True)
class LabSettings:
    """Numeric defaults shared by every command."""
    order: int = 128
    max_depth: int = 3
    cauchy_radius: float = 0.98
    tol: float = 1e-12
    seed: int = 42
    trials: int = 200
    boundary_offset: float = 1e-9
    comparison_tol: float = 1e-12
    schema_version: str = "1"


class ConfigManager:
    """Loads and validates the YAML configuration."""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path

    def load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML, falling back to built-in defaults when no file is bundled."""
        if self.config_path is None:
            if not os.path.exists(BUNDLED_CONFIG):
                logger.debug("No bundled config.yaml; using built-in defaults")
                return {section: dict(values) for section, values in DEFAULTS.items()}
            path = BUNDLED_CONFIG
        else:
            path = self.config_path
            if not os.path.exists(path):
                raise FileNotFoundError(f"Configuration file not found: {path}")

        with open(path, "r") as file:
            loaded = yaml.safe_load(file) or {}
        if not isinstance(loaded, dict):
            raise ValueError(f"Configuration root must be a mapping: {path}")

        config = self._merge_defaults(loaded)
        self._validate_config(config)
        logger.debug("Loaded configuration from %s", path)
        return config

    def _merge_defaults(self, loaded: Dict[str, Any]) -> Dict[str, Any]:
        config = {}
        for section, values in DEFAULTS.items():
            given = loaded.get(section, {})
            if not isinstance(given, dict):
                raise ValueError(f"Configuration section {section} must be a mapping")
            config[section] = {**values, **given}
        unknown = set(loaded) - set(DEFAULTS)
        if unknown:
            raise ValueError(f"Unknown configuration section: {', '.join(sorted(unknown))}")
        return config

    def _validate_config(self, config: Dict[str, Any]) -> None:
        """Validate the configuration structure and field types."""
        series = config["series"]
        for key in ("order", "max_depth"):
            if not isinstance(series[key], int) or isinstance(series[key], bool):
                raise ValueError(f"series.{key} must be an integer")
        if not 1 <= series["order"] <= MAX_ORDER:
            raise ValueError(f"series.order must lie in [1, {MAX_ORDER}]")
        if series["max_depth"] < 1:
            raise ValueError("series.max_depth must be at least 1")
        if not isinstance(series["cauchy_radius"], (int, float)) or not 0.0 < series["cauchy_radius"] < 1.0:
            raise ValueError("series.cauchy_radius must be a number in (0, 1)")

        tol = config["solver"]["tol"]
        if not isinstance(tol, (int, float)) or tol <= 0:
            raise ValueError("solver.tol must be a positive number")

        verify = config["verify"]
        for key in ("seed", "trials"):
            if not isinstance(verify[key], int) or isinstance(verify[key], bool):
                raise ValueError(f"verify.{key} must be an integer")
        if verify["seed"] < 0:
            raise ValueError("verify.seed must be non-negative")
        if verify["trials"] < 1:
            raise ValueError("verify.trials must be at least 1")
        if not isinstance(verify["boundary_offset"], (int, float)) or isinstance(verify["boundary_offset"], bool):
            raise ValueError("verify.boundary_offset must be a number")
        if not isinstance(verify["comparison_tol"], (int, float)) or verify["comparison_tol"] < 0:
            raise ValueError("verify.comparison_tol must be a non-negative number")

        if str(config["output"]["schema_version"]) != "1":
            raise ValueError("output.schema_version must be \"1\"")

    def create_settings(self, config: Dict[str, Any]) -> LabSettings:
        """Create immutable settings from configuration."""
        return LabSettings(
            order=config["series"]["order"],
            max_depth=config["series"]["max_depth"],
            cauchy_radius=float(config["series"]["cauchy_radius"]),
            tol=float(config["solver"]["tol"]),
            seed=config["verify"]["seed"],
            trials=config["verify"]["trials"],
            boundary_offset=float(config["verify"]["boundary_offset"]),
            comparison_tol=float(config["verify"]["comparison_tol"]),
            schema_version=str(config["output"]["schema_version"]),
        )
