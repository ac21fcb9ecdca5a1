"""
Runtime configuration.

Values come from (highest priority first) HEPTAGON_* environment variables,
a local ``.env`` file, the YAML file named by HEPTAGON_CONFIG_FILE, and the
defaults below. HEPTAGON_CONFIG_FILE itself is read from the process
environment.

Example ``heptagon.yaml``::

    oracle_tol: 1.0e-12
    compare_tol: 1.0e-9
    random_trials: 50
"""

from __future__ import annotations

import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Type

from pydantic import Field, field_validator
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    YamlConfigSettingsSource,
)

CONFIG_FILE_ENV = "HEPTAGON_CONFIG_FILE"
ENV_FILE = ".env"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class MappingYamlSource(YamlConfigSettingsSource):
    """YAML settings source that insists on a top-level mapping."""

    def _read_file(self, file_path: Path) -> Dict[str, Any]:
        data = super()._read_file(file_path)
        if not isinstance(data, dict):
            raise ValueError(f"{file_path} must contain a mapping of settings")
        return data


def yaml_source(settings_cls: Type[BaseSettings]) -> Optional[MappingYamlSource]:
    """
    Source for the YAML file named by HEPTAGON_CONFIG_FILE, if any.

    Raises:
        FileNotFoundError: The named file does not exist
        ValueError: The file does not hold a mapping
    """
    path = os.getenv(CONFIG_FILE_ENV)
    if not path:
        return None
    if not Path(path).is_file():
        raise FileNotFoundError(f"{CONFIG_FILE_ENV} points to a missing file: {path}")
    return MappingYamlSource(settings_cls, yaml_file=path, yaml_file_encoding="utf-8")


class HeptagonSettings(BaseSettings):
    """Tolerances, bounds and seeds used across the package."""

    model_config = SettingsConfigDict(
        env_prefix="HEPTAGON_",
        env_file=ENV_FILE,
        extra="ignore",
    )

    oracle_tol: float = Field(default=1e-12, gt=0, description="Jacobi convergence tolerance")
    oracle_max_sweeps: int = Field(default=100, gt=0, description="Jacobi sweep cap")
    compare_tol: float = Field(default=1e-9, gt=0, description="Exact vs numeric deviation bound")
    embed_tol: float = Field(default=1e-12, gt=0, description="Numeric identity tolerance")
    reconstruct_denominator: int = Field(default=10**6, gt=1)
    random_seed: int = 7
    random_trials: int = Field(default=25, ge=1)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        # logging.getLevelNamesMapping() is Python 3.11+; same mapping on 3.10.
        level_names = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))()
        if level not in level_names:
            raise ValueError(f"Unknown log level {value!r}")
        return level

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        sources = [init_settings, env_settings, dotenv_settings]
        yaml_settings = yaml_source(settings_cls)
        if yaml_settings is not None:
            sources.append(yaml_settings)
        sources.append(file_secret_settings)
        return tuple(sources)


_settings: Optional[HeptagonSettings] = None


def get_settings() -> HeptagonSettings:
    """Return the process-wide settings, creating them on first use."""
    global _settings
    if _settings is None:
        _settings = HeptagonSettings()
    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None


def configure_logging(level: Optional[str] = None) -> None:
    """Send log records to stderr; stdout carries command output only."""
    chosen = (level or get_settings().log_level).upper()
    logging.basicConfig(level=chosen, format=LOG_FORMAT, stream=sys.stderr, force=True)
