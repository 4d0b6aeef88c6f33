"""Tests for config settings: the MockConfig harness and the real Config.

The real module runs `config = Config()` on import, so it is loaded from its
file under a private name instead of replacing the mock in sys.modules.
"""

import importlib.util
import os

import pytest
import yaml

from src.definitions import CONFIG_EXAMPLE_PATH, ROOT_DIR
from src.utils.error_handler import ConfigError, CoxCheckError


@pytest.fixture(scope="module")
def settings():
    path = os.path.join(ROOT_DIR, "src", "config", "settings.py")
    spec = importlib.util.spec_from_file_location("src.config._real_settings", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def _example():
    with open(CONFIG_EXAMPLE_PATH, "r") as f:
        return yaml.safe_load(f)


def _write(tmp_path, data):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.dump(data))
    return str(path)


class TestMockConfig:
    """Test the MockConfig used in our test harness."""

    def test_getitem_oracle(self):
        from tests.conftest import _mock_config
        assert _mock_config["oracle"]["mode"] == "modular"
        assert _mock_config["oracle"]["seed"] == 20261018

    def test_get_missing_key_default(self):
        from tests.conftest import _mock_config
        assert _mock_config.get("nonexistent", "default") == "default"

    def test_getitem_missing_raises(self):
        from tests.conftest import _mock_config
        with pytest.raises(KeyError):
            _ = _mock_config["nonexistent"]

    def test_independent_copies(self):
        """MockConfig instances have independent data."""
        from tests.conftest import MockConfig
        cfg1 = MockConfig()
        cfg2 = MockConfig()
        cfg1.update_nested("oracle.mode", "exact")
        assert cfg2["oracle"]["mode"] == "modular"


class TestConfig:
    """Tests for the real Config class"""

    def test_example_defaults(self, settings, tmp_path):
        cfg = settings.Config(path=str(tmp_path / "absent.yaml"), example_path=CONFIG_EXAMPLE_PATH)
        assert cfg["oracle"]["primeBits"] == {"low": 50, "high": 62}
        assert cfg["survey"]["knownCounts"] == {30: 42, 100: 6814}
        assert cfg.get("missing") is None

    def test_missing_keys_filled(self, settings, tmp_path, capsys):
        data = _example()
        del data["moduli"]
        del data["oracle"]["maxAttempts"]
        cfg = settings.Config(path=_write(tmp_path, data), example_path=CONFIG_EXAMPLE_PATH)
        assert cfg["moduli"]["requireBasisRays"] is True
        assert cfg["oracle"]["maxAttempts"] == 3
        assert "oracle.maxAttempts" in capsys.readouterr().err

    def test_known_counts_not_merged(self, settings, tmp_path):
        data = _example()
        data["survey"]["knownCounts"] = {30: 42}
        cfg = settings.Config(path=_write(tmp_path, data), example_path=CONFIG_EXAMPLE_PATH)
        assert cfg["survey"]["knownCounts"] == {30: 42}

    def test_update_and_save(self, settings, tmp_path):
        path = _write(tmp_path, _example())
        cfg = settings.Config(path=path, example_path=CONFIG_EXAMPLE_PATH)
        cfg.update_nested("oracle.seed", 7)
        cfg.save()
        with open(path) as f:
            assert yaml.safe_load(f)["oracle"]["seed"] == 7

    def test_no_files(self, settings, tmp_path):
        with pytest.raises(ConfigError):
            settings.Config(path=str(tmp_path / "a.yaml"), example_path=str(tmp_path / "b.yaml"))

    def test_malformed_yaml(self, settings, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("oracle: [unclosed\n")
        with pytest.raises(ConfigError):
            settings.Config(path=str(path), example_path=CONFIG_EXAMPLE_PATH)

    def test_not_a_mapping(self, settings, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError):
            settings.Config(path=str(path), example_path=CONFIG_EXAMPLE_PATH)

    def test_errors_join_the_hierarchy(self, settings):
        assert issubclass(settings.ConfigError, CoxCheckError)
        assert settings.ConfigError is ConfigError

    @pytest.mark.parametrize("section,key,value", [
        ("oracle", "mode", "symbolic"),
        ("oracle", "primeCount", 0),
        ("oracle", "seed", "abc"),
        ("oracle", "jobs", True),
        ("survey", "chunkSize", -1),
        ("logging", "debug", "yes"),
        ("moduli", "requireBasisRays", 1),
    ])
    def test_invalid_values(self, settings, tmp_path, section, key, value):
        data = _example()
        data[section][key] = value
        with pytest.raises(ConfigError):
            settings.Config(path=_write(tmp_path, data), example_path=CONFIG_EXAMPLE_PATH)


class TestValidators:
    """Tests for the setting validators"""

    @pytest.mark.parametrize("bits", [
        {"low": 50, "high": 64},
        {"low": 62, "high": 50},
        {"low": 1, "high": 10},
        {"low": "50", "high": 62},
        [50, 62],
    ])
    def test_invalid_prime_bits(self, settings, bits):
        with pytest.raises(ConfigError):
            settings.validate_prime_bits(bits)

    def test_valid_prime_bits(self, settings):
        settings.validate_prime_bits({"low": 2, "high": 63})

    def test_seed(self, settings):
        settings.validate_seed(None)
        settings.validate_seed(20261018)
        with pytest.raises(ConfigError):
            settings.validate_seed(1.5)

    @pytest.mark.parametrize("counts", [{0: 1}, {"30": 42}, {30: -1}, [30, 42]])
    def test_invalid_known_counts(self, settings, counts):
        with pytest.raises(ConfigError):
            settings.validate_known_counts(counts)

    def test_oracle_mode(self, settings):
        settings.validate_oracle_mode("exact")
        with pytest.raises(ConfigError):
            settings.validate_oracle_mode("fast")
