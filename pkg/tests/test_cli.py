"""Tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from tracebench import __version__
from tracebench.cli import EXIT_ERROR, EXIT_REJECTED, EXIT_STUCK, cli, dispatch
from tracebench.monitors.codec import read_trace


@pytest.fixture
def runner(clean_env):
    return CliRunner()


class TestRun:
    """Test the run command."""

    def test_good_client(self, runner, clients_dir):
        result = runner.invoke(cli, ["run", str(clients_dir / "file-good.sx"), "--lib", "file", "--monitor", "L-file"])
        assert result.exit_code == 0, result.output
        assert "L-file: accepted" in result.output
        assert "status: value" in result.output

    def test_bad_client_is_reported(self, runner, clients_dir):
        result = runner.invoke(cli, ["run", str(clients_dir / "file-bad.sx"), "--lib", "file", "--monitor", "L-file"])
        assert result.exit_code == 0
        assert "REJECTED" in result.output
        assert "rejected at event 3" in result.output

    def test_enforce_exits_rejected(self, runner, clients_dir):
        result = runner.invoke(cli, [
            "run", str(clients_dir / "file-bad.sx"), "--lib", "file", "--monitor", "L-file", "--enforce",
        ])
        assert result.exit_code == EXIT_REJECTED

    def test_enforce_requires_monitor(self, runner, clients_dir):
        result = runner.invoke(cli, ["run", str(clients_dir / "file-bad.sx"), "--lib", "file", "--enforce"])
        assert result.exit_code == 2
        assert "--enforce requires --monitor" in result.output

    def test_stuck_program(self, runner, tmp_path):
        program = tmp_path / "stuck.sx"
        program.write_text("(app 1 2)")
        result = runner.invoke(cli, ["run", str(program)])
        assert result.exit_code == EXIT_STUCK

    def test_fuel_exhausted(self, runner, clients_dir):
        result = runner.invoke(cli, ["run", str(clients_dir / "counter.sx"), "--fuel", "2"])
        assert result.exit_code == EXIT_STUCK

    def test_value_is_printed(self, runner, clients_dir):
        result = runner.invoke(cli, ["run", str(clients_dir / "counter.sx")])
        assert result.exit_code == 0
        assert "value: 3" in result.output

    def test_parse_error(self, runner, tmp_path):
        program = tmp_path / "broken.sx"
        program.write_text("(seq")
        result = runner.invoke(cli, ["run", str(program)])
        assert result.exit_code == EXIT_ERROR

    def test_non_utf8_program(self, runner, tmp_path):
        program = tmp_path / "latin1.sx"
        program.write_bytes(b"(emit 'caf\xe9)")
        result = runner.invoke(cli, ["run", str(program)])
        assert result.exit_code == EXIT_ERROR
        assert "invalid UTF-8" in result.output

    def test_trace_out(self, runner, clients_dir, tmp_path):
        out = tmp_path / "trace.jsonl"
        result = runner.invoke(cli, ["run", str(clients_dir / "file-good.sx"), "--lib", "file", "--trace-out", str(out)])
        assert result.exit_code == 0
        assert len(out.read_text().splitlines()) == 3


class TestCheck:
    """Test the check command."""

    def test_accepted(self, runner, golden_dir):
        result = runner.invoke(cli, ["check", str(golden_dir / "file-good.jsonl"), "--lang", "L-file"])
        assert result.exit_code == 0
        assert "accepted (3 events)" in result.output

    def test_rejected(self, runner, golden_dir):
        result = runner.invoke(cli, ["check", str(golden_dir / "file-bad.jsonl"), "--lang", "L-file", "--prefixes"])
        assert result.exit_code == EXIT_REJECTED
        assert "first rejected at event 3" in result.output

    def test_unknown_language(self, runner, golden_dir):
        result = runner.invoke(cli, ["check", str(golden_dir / "file-good.jsonl"), "--lang", "L-nope"])
        assert result.exit_code == EXIT_ERROR

    def test_malformed_trace(self, runner, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text("not json\n")
        result = runner.invoke(cli, ["check", str(path), "--lang", "L-file"])
        assert result.exit_code == EXIT_ERROR

    def test_non_utf8_trace(self, runner, tmp_path):
        path = tmp_path / "latin1.jsonl"
        path.write_bytes(b'{"t":"sym","v":"caf\xe9"}\n')
        result = runner.invoke(cli, ["check", str(path), "--lang", "L-file"])
        assert result.exit_code == EXIT_ERROR
        assert "line 1" in result.output


class TestGoldenAgreement:
    """check on a golden trace agrees with run --monitor on its client."""

    @pytest.mark.parametrize("name,lib,lang", [
        ("file-good", "file", "L-file"),
        ("file-bad", "file", "L-file"),
        ("stack-foreach", "stack", "L-stack"),
    ])
    def test_check_matches_run(self, runner, clients_dir, golden_dir, tmp_path, name, lib, lang):
        out = tmp_path / f"{name}.jsonl"
        ran = runner.invoke(cli, [
            "run", str(clients_dir / f"{name}.sx"), "--lib", lib, "--monitor", lang, "--trace-out", str(out),
        ])
        assert ran.exit_code == 0, ran.output
        assert read_trace(out) == read_trace(golden_dir / f"{name}.jsonl")

        checked = runner.invoke(cli, ["check", str(golden_dir / f"{name}.jsonl"), "--lang", lang])
        assert checked.exit_code in (0, EXIT_REJECTED), checked.output
        assert (f"{lang}: accepted" in ran.output) == (checked.exit_code == 0)

    def test_rejection_positions_agree(self, runner, clients_dir, golden_dir):
        ran = runner.invoke(cli, ["run", str(clients_dir / "file-bad.sx"), "--lib", "file", "--monitor", "L-file"])
        checked = runner.invoke(cli, ["check", str(golden_dir / "file-bad.jsonl"), "--lang", "L-file"])
        assert "rejected at event 3" in ran.output
        assert "first rejected at event 3" in checked.output


@pytest.mark.integration
class TestHarnessCommands:
    """Test the scenario, fuzz, axiom and lemma commands."""

    def test_scenarios(self, runner, golden_dir, tmp_path):
        out = tmp_path / "report.json"
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"golden_dir": str(golden_dir)}))
        result = runner.invoke(cli, ["--config", str(config), "scenarios", "--id", "file-*", "--json-out", str(out)])
        assert result.exit_code == 0, result.output
        assert "2/2 scenarios passed" in result.output
        assert json.loads(out.read_text())["totals"]["passed"] == 2

    def test_scenarios_no_match(self, runner):
        result = runner.invoke(cli, ["scenarios", "--id", "zzz*"])
        assert result.exit_code == EXIT_ERROR

    def test_fuzz_erasure(self, runner, tmp_path):
        out = tmp_path / "fuzz.json"
        result = runner.invoke(cli, ["fuzz-erasure", "--seed", "3", "--count", "10", "--fuel", "2000", "--json-out", str(out)])
        assert result.exit_code == 0, result.output
        assert "0 failures" in result.output
        assert json.loads(out.read_text())["count"] == 10

    def test_fuzz_rejects_bad_fuel(self, runner):
        result = runner.invoke(cli, ["fuzz-erasure", "--fuel", "-1"])
        assert result.exit_code == EXIT_ERROR

    def test_axioms_tiny(self, runner):
        result = runner.invoke(cli, ["axioms", "--universe", "tiny"])
        assert result.exit_code == 0, result.output
        assert "FAIL" not in result.output

    def test_unknown_universe(self, runner):
        result = runner.invoke(cli, ["axioms", "--universe", "huge"])
        assert result.exit_code == EXIT_ERROR

    def test_lemmas(self, runner, tmp_path):
        out = tmp_path / "lemmas.json"
        result = runner.invoke(cli, ["lemmas", "--max-len", "3", "--json-out", str(out)])
        assert result.exit_code == 0, result.output
        assert "FAILS" not in result.output
        assert json.loads(out.read_text())["max_len"] == 3


class TestMisc:
    """Test the remaining global options."""

    def test_languages(self, runner):
        result = runner.invoke(cli, ["languages"])
        assert result.exit_code == 0
        assert "L-file" in result.output.split()
        assert "L-stack-simple" in result.output.split()

    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])
        assert __version__ in result.output

    def test_invalid_config_file(self, runner, tmp_path):
        config = tmp_path / "config.json"
        config.write_text("{broken")
        result = runner.invoke(cli, ["--config", str(config), "languages"])
        assert result.exit_code == EXIT_ERROR

    def test_env_config(self, runner, clients_dir):
        result = runner.invoke(
            cli, ["run", str(clients_dir / "counter.sx")], env={"TRACEBENCH_FUEL": "2"},
        )
        assert result.exit_code == EXIT_STUCK


class TestDispatch:
    """dispatch returns exit codes instead of exiting."""

    def test_ok(self, clean_env, capsys):
        assert dispatch(["languages"]) == 0
        assert "L-file" in capsys.readouterr().out

    def test_rejected(self, clean_env, golden_dir, capsys):
        assert dispatch(["check", str(golden_dir / "file-bad.jsonl"), "--lang", "L-file"]) == EXIT_REJECTED

    def test_usage_error(self, clean_env, capsys):
        assert dispatch(["no-such-command"]) == 2
