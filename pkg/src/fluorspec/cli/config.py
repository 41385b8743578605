"""Run-configuration loading."""

from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import ValidationError

from fluorspec.errors import ConfigError
from fluorspec.schemas import RunConfig


def _location(loc: tuple) -> str:
    return ".".join(str(part) for part in loc) or "<root>"


def config_error_from_validation(error: ValidationError) -> ConfigError:
    """Collapse a pydantic error into one message naming every bad field."""
    details = error.errors()
    parts = [f"{_location(d['loc'])}: {d['msg']}" for d in details]
    first = _location(details[0]["loc"]) if details else None
    return ConfigError("invalid configuration: " + "; ".join(parts), field=first)


class ConfigLoader:
    """Loads a RunConfig from a JSON or YAML file.

    JSON is a subset of YAML, so both go through ``yaml.safe_load``.
    """

    def __init__(self, config_file: Union[str, Path]):
        self.config_file = Path(config_file)
        self._raw: Optional[Dict[str, Any]] = None

    def _load_raw(self) -> Dict[str, Any]:
        if self._raw is None:
            try:
                with open(self.config_file, "r", encoding="utf-8") as f:
                    raw = yaml.safe_load(f)
            except FileNotFoundError:
                raise ConfigError(f"config file not found: {self.config_file}")
            except OSError as e:
                raise ConfigError(f"cannot read {self.config_file}: {e}")
            except yaml.YAMLError as e:
                raise ConfigError(f"cannot parse {self.config_file}: {e}")
            if not isinstance(raw, dict):
                raise ConfigError(
                    f"{self.config_file}: top level must be a mapping"
                )
            self._raw = raw
        return self._raw

    def load(self, **overrides: Any) -> RunConfig:
        """Validate the file, with non-None ``overrides`` replacing fields."""
        raw = dict(self._load_raw())
        raw.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return RunConfig.model_validate(raw)
        except ValidationError as e:
            raise config_error_from_validation(e) from None


def load_config(config_file: Union[str, Path], **overrides: Any) -> RunConfig:
    """Load and validate a run configuration file.

    Args:
        config_file: Path to a JSON or YAML file
        **overrides: Top-level fields replacing the file's, ignored when None

    Returns:
        The validated RunConfig

    Raises:
        ConfigError: If the file is missing, unparsable or invalid
    """
    return ConfigLoader(config_file).load(**overrides)
