"""Tests for the configuration system."""

import json
from pathlib import Path

import pytest

from tracebench.core.config import PROJECT_ROOT, Config, ConfigBuilder, ConfigPreset, load_config, resolve_data_dir
from tracebench.exceptions import ConfigError


class TestConfig:
    """Test the Config dataclass."""

    def test_default_values(self):
        config = Config()
        assert config.fuel == 1_000_000
        assert config.strict_alphabet is True
        assert config.universe == "default"
        assert config.fuzz_seed == 42
        assert config.fuzz_count == 500
        assert config.fuzz_fuel == 10_000
        assert config.gen_max_depth == 5
        assert config.emit_probability == 0.2
        assert config.log_level == "WARNING"

    def test_log_level_is_upper_cased(self):
        assert Config(log_level="debug").log_level == "DEBUG"

    @pytest.mark.parametrize("kwargs", [
        {"fuel": -1},
        {"fuzz_fuel": -1},
        {"fuzz_count": -5},
        {"gen_max_depth": -1},
        {"emit_probability": 1.5},
        {"universe": "huge"},
        {"log_level": "LOUD"},
    ])
    def test_validation(self, kwargs):
        with pytest.raises(ConfigError):
            Config(**kwargs)

    def test_config_error_is_value_error(self):
        with pytest.raises(ValueError):
            Config(fuel=-1)

    @pytest.mark.parametrize("preset,universe,count", [
        (ConfigPreset.QUICK, "tiny", 100),
        (ConfigPreset.DEFAULT, "default", 500),
        (ConfigPreset.THOROUGH, "full", 2_000),
    ])
    def test_presets(self, preset, universe, count):
        config = Config.from_preset(preset)
        assert config.universe == universe
        assert config.fuzz_count == count

    def test_from_dict_sections(self):
        config = Config.from_dict({
            "run": {"fuel": 50, "strict_alphabet": False},
            "fuzz": {"seed": 7, "count": 3, "max_depth": 2},
            "universe": "tiny",
        })
        assert config.fuel == 50
        assert config.strict_alphabet is False
        assert config.fuzz_seed == 7
        assert config.fuzz_count == 3
        assert config.gen_max_depth == 2
        assert config.universe == "tiny"

    def test_top_level_keys_win(self):
        config = Config.from_dict({"run": {"fuel": 50}, "fuel": 60})
        assert config.fuel == 60

    def test_unknown_keys_dropped(self):
        config = Config.from_dict({"fuel": 5, "colour": "blue", "fuzz": {"speed": 1}})
        assert config.fuel == 5

    def test_empty_dict(self):
        assert Config.from_dict({}) == Config()

    def test_to_dict_round_trip(self):
        config = Config(fuel=77, fuzz_seed=3, universe="tiny")
        data = config.to_dict()
        assert data["run"]["fuel"] == 77
        assert data["fuzz"]["seed"] == 3
        assert Config.from_dict(data) == config

    def test_merged_ignores_none(self):
        config = Config(fuel=10).merged(fuel=None, fuzz_seed=9)
        assert config.fuel == 10
        assert config.fuzz_seed == 9

    def test_merged_validates(self):
        with pytest.raises(ConfigError):
            Config().merged(fuel=-3)


class TestConfigFiles:
    """Test loading and saving configuration files."""

    def test_json_round_trip(self, tmp_path):
        path = tmp_path / "config.json"
        Config(fuel=123, golden_dir="g").to_file(path)
        loaded = Config.from_file(path)
        assert loaded.fuel == 123
        assert loaded.golden_dir == "g"
        assert json.loads(path.read_text())["run"]["fuel"] == 123

    def test_yaml_round_trip(self, tmp_path):
        pytest.importorskip("yaml")
        path = tmp_path / "config.yaml"
        Config(fuzz_count=9, universe="full").to_file(path)
        loaded = Config.from_file(path)
        assert loaded.fuzz_count == 9
        assert loaded.universe == "full"

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            Config.from_file(tmp_path / "missing.json")

    def test_unsupported_extension(self, tmp_path):
        path = tmp_path / "config.toml"
        path.write_text("fuel = 1")
        with pytest.raises(ConfigError):
            Config.from_file(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError):
            Config.from_file(path)

    def test_non_mapping(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("[1, 2]")
        with pytest.raises(ConfigError):
            Config.from_file(path)

    def test_to_file_unsupported_extension(self, tmp_path):
        with pytest.raises(ConfigError):
            Config().to_file(tmp_path / "config.ini")


class TestEnvironment:
    """Test environment overrides."""

    def test_from_env(self, clean_env):
        clean_env.setenv("TRACEBENCH_FUEL", "999")
        clean_env.setenv("TRACEBENCH_STRICT_ALPHABET", "false")
        clean_env.setenv("TRACEBENCH_EMIT_PROBABILITY", "0.5")
        clean_env.setenv("TRACEBENCH_UNIVERSE", "tiny")
        config = Config.from_env()
        assert config.fuel == 999
        assert config.strict_alphabet is False
        assert config.emit_probability == 0.5
        assert config.universe == "tiny"

    def test_invalid_env_value(self, clean_env):
        clean_env.setenv("TRACEBENCH_FUEL", "lots")
        with pytest.raises(ConfigError):
            Config.from_env()

    def test_custom_prefix(self, clean_env):
        clean_env.setenv("TB_FUZZ_SEED", "5")
        assert Config.from_env(prefix="TB_").fuzz_seed == 5

    def test_load_config_precedence(self, clean_env, tmp_path):
        clean_env.setenv("TRACEBENCH_FUEL", "10")
        clean_env.setenv("TRACEBENCH_FUZZ_SEED", "11")
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"run": {"fuel": 20}}))
        config = load_config(path)
        assert config.fuel == 20
        assert config.fuzz_seed == 11

    def test_load_config_without_file(self, clean_env):
        assert load_config() == Config()


class TestConfigBuilder:
    """Test the fluent builder."""

    def test_builder(self):
        config = (
            ConfigBuilder()
            .fuel(500)
            .strict_alphabet(False)
            .universe("tiny")
            .fuzz(seed=1, count=2)
            .generator(max_depth=3, emit_probability=0.5)
            .golden_dir("g")
            .clients_dir("c")
            .log_level("info")
            .build()
        )
        assert config.fuel == 500
        assert config.strict_alphabet is False
        assert config.universe == "tiny"
        assert (config.fuzz_seed, config.fuzz_count, config.fuzz_fuel) == (1, 2, 10_000)
        assert (config.gen_max_depth, config.emit_probability) == (3, 0.5)
        assert (config.golden_dir, config.clients_dir) == ("g", "c")
        assert config.log_level == "INFO"

    def test_builder_from_preset(self):
        config = ConfigBuilder().from_preset(ConfigPreset.QUICK).fuel(7).build()
        assert config.universe == "tiny"
        assert config.fuel == 7

    def test_builder_from_file(self, tmp_path):
        path = tmp_path / "config.json"
        Config(fuel=31).to_file(path)
        assert ConfigBuilder().from_file(path).fuzz(count=4).build().fuel == 31

    def test_builder_from_kwargs(self):
        assert ConfigBuilder().from_kwargs(fuzz_fuel=12).build().fuzz_fuel == 12

    def test_builder_validates(self):
        with pytest.raises(ConfigError):
            ConfigBuilder().universe("nowhere").build()


class TestDataDirs:
    """Test resolution of the golden and clients directories."""

    def test_defaults_found_from_any_directory(self, clean_env, tmp_path, repo_root):
        clean_env.chdir(tmp_path)
        config = Config()
        assert config.golden_path == PROJECT_ROOT / "golden"
        assert config.clients_path == repo_root / "clients"
        assert (config.clients_path / "file-good.sx").is_file()

    def test_working_directory_wins(self, clean_env, tmp_path):
        (tmp_path / "golden").mkdir()
        clean_env.chdir(tmp_path)
        assert resolve_data_dir("golden") == Path("golden")

    def test_absolute_path_kept(self, tmp_path):
        assert Config(golden_dir=str(tmp_path / "nowhere")).golden_path == tmp_path / "nowhere"

    def test_unknown_relative_path_kept(self, clean_env, tmp_path):
        clean_env.chdir(tmp_path)
        assert str(resolve_data_dir("no-such-dir")) == "no-such-dir"
