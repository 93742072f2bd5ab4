"""Unit tests for the engine configuration."""

import pytest

from solvcohom.core.config import EngineConfig
from solvcohom.core.errors import ErrorCode
from solvcohom.core.exceptions import ConfigurationException


class TestDefaults:
    """Test built-in defaults"""

    def test_defaults(self, default_config):
        """Test values without a file or environment"""
        assert default_config.config_path is None
        assert default_config.scan_budget == 4000
        assert default_config.max_total_degree == 4
        assert default_config.golden_workers == 4
        assert default_config.output_format == "text"
        assert default_config.log_level == "WARNING"

    def test_missing_file_falls_back(self, default_config, tmp_path):
        """Test that a missing file keeps the defaults"""
        config = EngineConfig(str(tmp_path / "absent.yaml"))
        assert config.scan_budget == default_config.scan_budget

    def test_default_path_is_picked_up(self, default_config, tmp_path):
        """Test config/solvcohom.yaml in the working directory"""
        (tmp_path / "config").mkdir()
        (tmp_path / "config" / "solvcohom.yaml").write_text("massey:\n  scan_budget: 12\n")
        config = EngineConfig()
        assert config.config_path.endswith("solvcohom.yaml")
        assert config.scan_budget == 12


class TestFileAndEnvironment:
    """Test overrides"""

    def test_file_merges_sections(self, default_config, tmp_path):
        """Test that a partial section keeps the other keys"""
        path = tmp_path / "engine.yaml"
        path.write_text("massey:\n  max_total_degree: 3\noutput:\n  format: json\n")
        config = EngineConfig(str(path))
        assert config.max_total_degree == 3
        assert config.scan_budget == 4000
        assert config.output_format == "json"

    def test_environment_wins(self, default_config, tmp_path, monkeypatch):
        """Test environment overrides on top of the file"""
        path = tmp_path / "engine.yaml"
        path.write_text("massey:\n  scan_budget: 10\n")
        monkeypatch.setenv("SOLVCOHOM_SCAN_BUDGET", "25")
        monkeypatch.setenv("SOLVCOHOM_LOG_LEVEL", "debug")
        config = EngineConfig(str(path))
        assert config.scan_budget == 25
        assert config.log_level == "debug"

    def test_workers_at_least_one(self, default_config, monkeypatch):
        """Test that zero workers still runs serially"""
        monkeypatch.setenv("SOLVCOHOM_GOLDEN_WORKERS", "0")
        assert EngineConfig().golden_workers == 1

    def test_unreadable_yaml_falls_back(self, default_config, tmp_path):
        """Test that a broken file is ignored with a warning"""
        path = tmp_path / "broken.yaml"
        path.write_text("massey: [unclosed\n")
        assert EngineConfig(str(path)).scan_budget == 4000


class TestValidation:
    """Test rejected values"""

    @pytest.mark.parametrize("value", ["many", "-1"])
    def test_bad_integer(self, default_config, monkeypatch, value):
        """Test non-integers and negatives"""
        monkeypatch.setenv("SOLVCOHOM_SCAN_BUDGET", value)
        with pytest.raises(ConfigurationException) as exc_info:
            EngineConfig()
        assert exc_info.value.error_code == ErrorCode.CFG001
        assert exc_info.value.exit_code == 2

    def test_bad_format(self, default_config, tmp_path):
        """Test an unknown output format"""
        path = tmp_path / "engine.yaml"
        path.write_text("output:\n  format: pdf\n")
        with pytest.raises(ConfigurationException):
            EngineConfig(str(path))
