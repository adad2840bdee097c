"""
Tests for configuration loading and logging setup
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest
from loguru import logger
from pydantic import ValidationError

from src.config import Config, LoggingConfig, SearchConfig, load_config
from src.enhanced_logging import MetricsLogger, setup_enhanced_logging
from src.logger import get_logger


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    for key in list(os.environ):
        if key.startswith("ARBOR_"):
            monkeypatch.delenv(key)
    return str(tmp_path / "missing.env")


class TestLoadConfig:
    """Test environment-driven configuration"""

    def test_defaults(self, clean_env):
        """Should fall back to the defaults"""
        config = load_config(clean_env)
        assert config.search.max_vertices == 64
        assert config.search.budget_ms is None
        assert config.logging.level == "WARNING"
        assert config.logging.log_dir is None

    def test_environment(self, clean_env, monkeypatch):
        """Should read ARBOR_* variables"""
        monkeypatch.setenv("ARBOR_BUDGET_MS", "250")
        monkeypatch.setenv("ARBOR_EXACT_MAX_VERTICES", "12")
        monkeypatch.setenv("ARBOR_LOG_LEVEL", "debug")
        monkeypatch.setenv("ARBOR_LOG_STRUCTURED", "false")
        config = load_config(clean_env)
        assert config.search.budget_ms == 250
        assert config.search.exact_max_vertices == 12
        assert config.logging.level == "DEBUG"
        assert not config.logging.structured

    def test_env_file(self, clean_env, tmp_path):
        """Should read a .env file"""
        env_file = tmp_path / "test.env"
        env_file.write_text("ARBOR_MAX_NODES=1000\nARBOR_LOG_LEVEL=error\n")
        try:
            config = load_config(str(env_file))
        finally:
            os.environ.pop("ARBOR_MAX_NODES", None)
            os.environ.pop("ARBOR_LOG_LEVEL", None)
        assert config.search.max_nodes == 1000
        assert config.logging.level == "ERROR"

    def test_empty_values(self, clean_env, monkeypatch):
        """Should treat empty budget variables as unset"""
        monkeypatch.setenv("ARBOR_BUDGET_MS", "")
        monkeypatch.setenv("ARBOR_LOG_DIR", "")
        config = load_config(clean_env)
        assert config.search.budget_ms is None
        assert config.logging.log_dir is None

    def test_out_of_range(self, clean_env, monkeypatch):
        """Should reject values outside their range"""
        monkeypatch.setenv("ARBOR_EXACT_MAX_VERTICES", "100")
        with pytest.raises(ValidationError):
            load_config(clean_env)

    def test_every_setting_is_read(self, clean_env, monkeypatch):
        """Should read every variable listed in .env.example into a config field"""
        example = Path(__file__).resolve().parents[2] / ".env.example"
        keys = [
            line.split("=", 1)[0].strip()
            for line in example.read_text().splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
        overrides = {
            "ARBOR_BUDGET_MS": ("7", lambda c: c.search.budget_ms == 7),
            "ARBOR_MAX_NODES": ("8", lambda c: c.search.max_nodes == 8),
            "ARBOR_MAX_VERTICES": ("9", lambda c: c.search.max_vertices == 9),
            "ARBOR_EXACT_MAX_VERTICES": ("10", lambda c: c.search.exact_max_vertices == 10),
            "ARBOR_EXACT_SMALL_K_MAX_VERTICES": ("11", lambda c: c.search.exact_small_k_max_vertices == 11),
            "ARBOR_TREEWIDTH_MAX_VERTICES": ("12", lambda c: c.search.treewidth_max_vertices == 12),
            "ARBOR_LOG_LEVEL": ("info", lambda c: c.logging.level == "INFO"),
            "ARBOR_LOG_STRUCTURED": ("false", lambda c: not c.logging.structured),
            "ARBOR_LOG_DIR": ("logs", lambda c: c.logging.log_dir == "logs"),
        }
        assert sorted(keys) == sorted(overrides)
        for key, (value, _) in overrides.items():
            monkeypatch.setenv(key, value)
        config = load_config(clean_env)
        assert [key for key, (_, check) in overrides.items() if not check(config)] == []

    def test_no_unused_sections(self):
        """Should expose only the sections the commands consume"""
        assert set(Config.model_fields) == {"search", "logging"}

    def test_bad_log_level(self):
        """Should reject unknown log levels"""
        with pytest.raises(ValidationError):
            LoggingConfig(level="LOUD")


class TestSearchConfig:
    """Test derived caps and overrides"""

    def test_exact_cap(self):
        """Should allow larger graphs for small k"""
        search = SearchConfig(exact_max_vertices=10, exact_small_k_max_vertices=14)
        assert search.exact_cap_for(1) == 14
        assert search.exact_cap_for(3) == 14
        assert search.exact_cap_for(4) == 10

    def test_overrides(self):
        """Should replace only the fields that are given"""
        config = Config()
        assert config.with_overrides(budget_ms=None) is config
        updated = config.with_overrides(budget_ms=50, max_nodes=None)
        assert updated.search.budget_ms == 50
        assert updated.search.max_nodes is None
        assert config.search.budget_ms is None

    def test_overrides_validate(self):
        """Should validate overridden values"""
        with pytest.raises(ValidationError):
            Config().with_overrides(max_nodes=0)


class TestLogging:
    """Test log sinks and metrics"""

    def test_file_sinks(self, tmp_path):
        """Should write structured logs to the log directory"""
        setup_enhanced_logging(log_dir=str(tmp_path), console_level="ERROR")
        get_logger("tests").info("hello from the test")
        files = list(tmp_path.glob("arbor_*.jsonl"))
        assert len(files) == 1
        assert "hello from the test" in files[0].read_text()
        assert (tmp_path / "errors.log").exists()
        setup_enhanced_logging(console_level="WARNING")

    def test_quiet_before_setup(self, clean_env):
        """Should print nothing from library modules before sinks are configured"""
        root = Path(__file__).resolve().parents[2]
        env = {**os.environ, "PYTHONPATH": str(root)}
        result = subprocess.run(
            [sys.executable, "-c", f"from src.config import load_config; load_config({clean_env!r})"],
            cwd=root, env=env, capture_output=True, text=True, check=True,
        )
        assert result.stderr == ""
        assert result.stdout == ""

    def test_setup_enables_library_logs(self, clean_env):
        """Should route library debug logs once logging is set up"""
        setup_enhanced_logging(console_level="ERROR")
        messages = []
        sink = logger.add(messages.append, level="DEBUG", format="{message}")
        try:
            load_config(clean_env)
        finally:
            logger.remove(sink)
            setup_enhanced_logging(console_level="WARNING")
        assert any("not found" in message for message in messages)

    def test_metrics(self, tmp_path):
        """Should append one JSON line per solver run"""
        metrics = MetricsLogger(str(tmp_path / "metrics"))
        metrics.log_solver_run("fk", "abc123", 12.3456, "exhausted", k=2, value=3)
        metrics.log_solver_run("stats", "abc123", 1.0, "done")
        lines = (tmp_path / "metrics" / "metrics.jsonl").read_text().splitlines()
        assert len(lines) == 2
        first = json.loads(lines[0])
        assert first["component"] == "fk"
        assert first["duration_ms"] == 12.346
        assert first["value"] == 3
