"""Configuration and program execution."""

from .config import Config, ConfigBuilder, ConfigPreset, load_config
from .executor import ExecutionResult, ProgramExecutor

__all__ = [
    "Config",
    "ConfigBuilder",
    "ConfigPreset",
    "ExecutionResult",
    "ProgramExecutor",
    "load_config",
]
