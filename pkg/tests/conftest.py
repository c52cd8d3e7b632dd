"""Pytest configuration and fixtures for tracebench tests."""

from pathlib import Path

import pytest

from tracebench.core.config import Config
from tracebench.core.executor import ProgramExecutor
from tracebench.semantics.universe import get_universe


REPO_ROOT = Path(__file__).resolve().parent.parent

collect_ignore = [
    "examples",
]


@pytest.fixture
def repo_root() -> Path:
    return REPO_ROOT


@pytest.fixture
def clients_dir() -> Path:
    return REPO_ROOT / "clients"


@pytest.fixture
def golden_dir() -> Path:
    return REPO_ROOT / "golden"


@pytest.fixture
def config(golden_dir) -> Config:
    """Configuration pointing at the repository's data directories."""
    return Config(
        fuel=200_000,
        golden_dir=str(golden_dir),
        clients_dir=str(REPO_ROOT / "clients"),
    )


@pytest.fixture
def executor(config) -> ProgramExecutor:
    return ProgramExecutor(config)


@pytest.fixture
def tiny_universe():
    return get_universe("tiny")


@pytest.fixture
def clean_env(monkeypatch):
    """Remove every TRACEBENCH_* variable for the duration of a test."""
    import os

    for key in list(os.environ):
        if key.startswith("TRACEBENCH_"):
            monkeypatch.delenv(key, raising=False)
    return monkeypatch


