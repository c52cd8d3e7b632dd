"""Tests for the top-level package API."""

import pytest

import tracebench
from tracebench import Config, check_trace, list_languages, list_libraries, run_client
from tracebench.exceptions import ConfigError
from tests.events import CLOSE, OPEN, READ


class TestRunClient:
    def test_monitored_run(self):
        result = run_client(
            "(with-lib (open close read) (seq (app open ()) (app read ()) (app close ())))",
            lib="file", monitor="L-file",
        )
        assert result.final_verdict is True
        assert result.trace == (OPEN, READ, CLOSE)

    def test_config_kwargs(self):
        result = run_client("(seq (emit 'x) (emit 'open))", monitor="L-file", strict_alphabet=False)
        assert result.final_verdict is True

    def test_invalid_kwargs(self):
        with pytest.raises(ConfigError):
            run_client("()", universe="huge")


class TestHelpers:
    def test_check_trace(self):
        assert check_trace([OPEN, CLOSE, READ], "L-file") == [True, True, False]

    def test_listings(self):
        assert "stack-simple" in list_libraries()
        assert "L-brac" in list_languages()

    def test_exports(self):
        for name in tracebench.__all__:
            assert hasattr(tracebench, name), name
        assert isinstance(Config(), Config)
