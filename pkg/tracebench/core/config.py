#!/usr/bin/env python3
"""
Configuration for the tracebench workbench.

A single dataclass holds every tunable of the interpreter, the fuzzer and the
resource-model checks. It can be built from presets, dictionaries, JSON/YAML
files, environment variables or the fluent :class:`ConfigBuilder`.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Union

from ..exceptions import ConfigError

try:
    import yaml
except ImportError:
    yaml = None


logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# Checkout root; relative data directories missing from the working
# directory are looked up here.
PROJECT_ROOT = Path(__file__).resolve().parents[2]

# Nested sections accepted by from_dict and produced by to_dict.
_SECTIONS: Dict[str, Dict[str, str]] = {
    "run": {
        "fuel": "fuel",
        "strict_alphabet": "strict_alphabet",
    },
    "fuzz": {
        "seed": "fuzz_seed",
        "count": "fuzz_count",
        "fuel": "fuzz_fuel",
        "max_depth": "gen_max_depth",
        "emit_probability": "emit_probability",
    },
}


class ConfigPreset(Enum):
    """Pre-configured settings for common use cases."""
    QUICK = "quick"         # Small universe and short fuzz runs
    DEFAULT = "default"
    THOROUGH = "thorough"   # Largest universe, long fuzz runs


@dataclass
class Config:
    """
    Workbench configuration.

    Example:
        >>> config = Config(fuel=10_000, universe="tiny")
        >>> config.to_dict()["run"]["fuel"]
        10000
    """

    # Interpreter
    fuel: int = 1_000_000
    strict_alphabet: bool = True

    # Data locations
    golden_dir: str = "golden"
    clients_dir: str = "clients"

    # Resource model
    universe: str = "default"

    # Erasure fuzzing
    fuzz_seed: int = 42
    fuzz_count: int = 500
    fuzz_fuel: int = 10_000
    gen_max_depth: int = 5
    emit_probability: float = 0.2

    log_level: str = "WARNING"

    def __post_init__(self):
        self.log_level = str(self.log_level).upper()
        self._validate()

    def _validate(self):
        from ..semantics.universe import UNIVERSE_PRESETS

        if self.fuel < 0:
            raise ConfigError("fuel must be non-negative")
        if self.fuzz_fuel < 0:
            raise ConfigError("fuzz_fuel must be non-negative")
        if self.fuzz_count < 0:
            raise ConfigError("fuzz_count must be non-negative")
        if self.gen_max_depth < 0:
            raise ConfigError("gen_max_depth must be non-negative")
        if not 0.0 <= self.emit_probability <= 1.0:
            raise ConfigError("emit_probability must be between 0 and 1")
        if self.universe not in UNIVERSE_PRESETS:
            raise ConfigError(
                f"Unknown universe preset '{self.universe}'. "
                f"Available presets: {', '.join(UNIVERSE_PRESETS)}"
            )
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(f"Unknown log level '{self.log_level}'. Use one of: {', '.join(LOG_LEVELS)}")

    @property
    def golden_path(self) -> Path:
        return resolve_data_dir(self.golden_dir)

    @property
    def clients_path(self) -> Path:
        return resolve_data_dir(self.clients_dir)

    @classmethod
    def from_preset(cls, preset: ConfigPreset) -> 'Config':
        """Create configuration from preset."""
        if preset == ConfigPreset.QUICK:
            return cls(universe="tiny", fuzz_count=100, fuzz_fuel=2_000, gen_max_depth=4)
        elif preset == ConfigPreset.DEFAULT:
            return cls()
        elif preset == ConfigPreset.THOROUGH:
            return cls(universe="full", fuzz_count=2_000, fuzz_fuel=100_000)
        else:
            raise ConfigError(f"Unknown preset: {preset}")

    @staticmethod
    def flatten(data: Dict[str, Any]) -> Dict[str, Any]:
        """Map ``run``/``fuzz`` sections onto field names; top-level keys win."""
        flattened: Dict[str, Any] = {}
        for section, mapping in _SECTIONS.items():
            for key, value in (data.get(section) or {}).items():
                if key in mapping:
                    flattened[mapping[key]] = value
        for key, value in data.items():
            if key not in _SECTIONS:
                flattened[key] = value
        return flattened

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Config':
        """Create configuration from a flat or sectioned dictionary; unknown keys are dropped."""
        if not data:
            return cls()

        flattened = cls.flatten(data)
        valid_fields = {f.name for f in fields(cls)}
        dropped = sorted(set(flattened) - valid_fields)
        if dropped:
            logger.debug(f"Ignoring unknown configuration keys: {dropped}")
        return cls(**{k: v for k, v in flattened.items() if k in valid_fields})

    @classmethod
    def from_file(cls, file_path: Union[str, Path]) -> 'Config':
        """Load configuration from file (JSON or YAML)."""
        return cls.from_dict(cls.read_file(file_path))

    @staticmethod
    def read_file(file_path: Union[str, Path]) -> Dict[str, Any]:
        """Raw mapping stored in a JSON or YAML configuration file."""
        file_path = Path(file_path)

        if not file_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {file_path}")

        supported_extensions = ['.json', '.yml', '.yaml']
        if file_path.suffix.lower() not in supported_extensions:
            raise ConfigError(f"Unsupported config file format. Supported extensions: {', '.join(supported_extensions)}")

        with open(file_path, 'r', encoding='utf-8') as f:
            if file_path.suffix.lower() in ['.yml', '.yaml']:
                if yaml is None:
                    raise ImportError("PyYAML required for YAML configuration files")
                try:
                    data = yaml.safe_load(f)
                except yaml.YAMLError as e:
                    raise ConfigError(f"Invalid YAML format: {e}") from e
            else:
                try:
                    data = json.load(f)
                except json.JSONDecodeError as e:
                    raise ConfigError(f"Invalid JSON format: {e}") from e

        if data is not None and not isinstance(data, dict):
            raise ConfigError(f"Configuration file {file_path} must contain a mapping")
        return data or {}

    @classmethod
    def from_env(cls, prefix: str = "TRACEBENCH_") -> 'Config':
        """Create configuration from environment variables such as ``TRACEBENCH_FUEL``."""
        return cls.from_dict(cls.env_overrides(prefix))

    @classmethod
    def env_overrides(cls, prefix: str = "TRACEBENCH_") -> Dict[str, Any]:
        """Field values set through the environment, converted to the field types."""
        data: Dict[str, Any] = {}
        for f in fields(cls):
            env_key = f"{prefix}{f.name.upper()}"
            if env_key not in os.environ:
                continue
            raw = os.environ[env_key]
            try:
                if f.type in (bool, 'bool'):
                    data[f.name] = raw.lower() in ('true', '1', 'yes')
                elif f.type in (int, 'int'):
                    data[f.name] = int(raw)
                elif f.type in (float, 'float'):
                    data[f.name] = float(raw)
                else:
                    data[f.name] = raw
            except ValueError as e:
                raise ConfigError(f"Invalid value for {env_key}: {raw!r}") from e
        return data

    def to_dict(self) -> Dict[str, Any]:
        flat = asdict(self)
        result: Dict[str, Any] = {}
        for section, mapping in _SECTIONS.items():
            result[section] = {key: flat.pop(name) for key, name in mapping.items()}
        result.update(flat)
        return result

    def to_file(self, file_path: Union[str, Path], format: str = "json"):
        """Save configuration to file; a ``.yml``/``.yaml`` suffix selects YAML."""
        file_path = Path(file_path)
        data = self.to_dict()

        extension = file_path.suffix.lower()
        if extension in ['.yml', '.yaml']:
            format = 'yaml'
        elif extension and extension != '.json':
            raise ConfigError(f"Unsupported config file format: {extension}")

        valid_formats = ["json", "yaml", "yml"]
        if format.lower() not in valid_formats:
            raise ConfigError(f"Unsupported format '{format}'. Use one of: {valid_formats}")

        with open(file_path, 'w', encoding='utf-8') as f:
            if format.lower() in ["yaml", "yml"]:
                if yaml is None:
                    raise ImportError("PyYAML required for YAML output")
                yaml.dump(data, f, default_flow_style=False)
            else:
                json.dump(data, f, indent=2)

    def merged(self, **overrides: Any) -> 'Config':
        """Copy with the non-None ``overrides`` applied."""
        data = asdict(self)
        data.update({k: v for k, v in overrides.items() if v is not None})
        return Config(**data)


class ConfigBuilder:
    """
    Fluent builder for Config objects.

    Example:
        >>> config = ConfigBuilder() \\
        ...     .fuel(10_000) \\
        ...     .universe("tiny") \\
        ...     .fuzz(seed=7, count=50) \\
        ...     .build()
    """

    def __init__(self):
        self._data: Dict[str, Any] = {}

    def fuel(self, fuel: int) -> 'ConfigBuilder':
        self._data['fuel'] = fuel
        return self

    def strict_alphabet(self, enabled: bool = True) -> 'ConfigBuilder':
        """Reject events outside the language alphabet instead of skipping them."""
        self._data['strict_alphabet'] = enabled
        return self

    def universe(self, name: str) -> 'ConfigBuilder':
        self._data['universe'] = name
        return self

    def fuzz(self, seed: int = None, count: int = None, fuel: int = None) -> 'ConfigBuilder':
        """Set erasure-fuzzing parameters; omitted values keep their defaults."""
        for key, value in (("fuzz_seed", seed), ("fuzz_count", count), ("fuzz_fuel", fuel)):
            if value is not None:
                self._data[key] = value
        return self

    def generator(self, max_depth: int = None, emit_probability: float = None) -> 'ConfigBuilder':
        if max_depth is not None:
            self._data['gen_max_depth'] = max_depth
        if emit_probability is not None:
            self._data['emit_probability'] = emit_probability
        return self

    def golden_dir(self, path: Union[str, Path]) -> 'ConfigBuilder':
        self._data['golden_dir'] = str(path)
        return self

    def clients_dir(self, path: Union[str, Path]) -> 'ConfigBuilder':
        self._data['clients_dir'] = str(path)
        return self

    def log_level(self, level: str) -> 'ConfigBuilder':
        self._data['log_level'] = level
        return self

    def from_preset(self, preset: ConfigPreset) -> 'ConfigBuilder':
        """Start from a preset configuration."""
        self._data = asdict(Config.from_preset(preset))
        return self

    def from_file(self, file_path: Union[str, Path]) -> 'ConfigBuilder':
        self._data = asdict(Config.from_file(file_path))
        return self

    def from_kwargs(self, **kwargs) -> 'ConfigBuilder':
        self._data.update(kwargs)
        return self

    def build(self) -> Config:
        """Build and validate the configuration."""
        return Config.from_dict(self._data)


def load_config(file_path: Union[str, Path, None] = None, prefix: str = "TRACEBENCH_") -> Config:
    """Defaults, overridden by the environment, overridden by ``file_path``."""
    data = Config.env_overrides(prefix)
    if file_path is not None:
        data.update(Config.flatten(Config.read_file(file_path)))
    return Config.from_dict(data)


def resolve_data_dir(path: Union[str, Path]) -> Path:
    """Resolve a data directory such as ``golden`` or ``clients``.

    Absolute paths and paths that exist from the working directory are used
    as given; otherwise the path is taken relative to :data:`PROJECT_ROOT`
    when it exists there.
    """
    candidate = Path(path)
    if candidate.is_absolute() or candidate.exists():
        return candidate
    bundled = PROJECT_ROOT / candidate
    return bundled if bundled.exists() else candidate
