"""Custom exceptions for the tracebench workbench."""
from typing import List, Optional


class TraceBenchError(Exception):
    """Base exception for all workbench errors."""

    pass


class ConfigError(TraceBenchError, ValueError):
    """Raised when a configuration value is invalid."""

    pass


class ParseError(TraceBenchError):
    """Raised when program text does not conform to the concrete syntax."""

    def __init__(self, message: str, line: int, column: int):
        self.reason = message
        self.line = line
        self.column = column
        super().__init__(f"{message} at line {line}, column {column}")


class TraceFormatError(TraceBenchError):
    """Raised when a JSONL trace file cannot be decoded."""

    def __init__(self, path: str, line_no: int, reason: str):
        self.path = path
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"Invalid trace file '{path}' at line {line_no}: {reason}")


class LibraryError(TraceBenchError):
    """Base exception for library bundle and wrapper errors."""

    pass


class UnknownLibraryError(LibraryError):
    """Raised when a library bundle name is not registered."""

    def __init__(self, name: str, supported: Optional[List[str]] = None):
        self.name = name
        self.supported = supported or []

        if self.supported:
            message = f"Library '{name}' is not supported. Supported libraries: {', '.join(self.supported)}"
        else:
            message = f"Library '{name}' is not supported."

        super().__init__(message)


class ArityMismatchError(LibraryError):
    """Raised when a bundle does not have the operations a wrapper expects."""

    def __init__(self, name: str, expected: List[str], actual: List[str]):
        self.name = name
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"Wrapper '{name}' expects operations ({', '.join(expected)}) "
            f"but the bundle provides ({', '.join(actual)})"
        )


class MonitorError(TraceBenchError):
    """Base exception for trace language errors."""

    pass


class UnknownLanguageError(MonitorError):
    """Raised when a trace language identifier is not registered."""

    def __init__(self, lang: str, supported: Optional[List[str]] = None):
        self.lang = lang
        self.supported = supported or []

        message = f"Trace language '{lang}' is not supported."
        if self.supported:
            message += f" Supported languages: {', '.join(self.supported)}"

        super().__init__(message)


class TraceIndexError(MonitorError, IndexError):
    """Raised when a 1-based trace index is out of range."""

    def __init__(self, index: int, length: int):
        self.index = index
        self.length = length
        super().__init__(f"Trace index {index} is outside 1..{length + 1}")


class ScenarioError(TraceBenchError):
    """Base exception for scenario catalogue errors."""

    pass


class UnknownScenarioError(ScenarioError):
    """Raised when a scenario id is not registered."""

    def __init__(self, scenario_id: str):
        self.scenario_id = scenario_id
        super().__init__(f"Scenario '{scenario_id}' is not registered")
