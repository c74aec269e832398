"""Unit tests for configuration, logging and error mapping."""

import json
import logging

import pytest

from src.utils.config import Config, EnvironmentConfig, apply_environment, load_config
from src.utils.errors import (
    CheckFailure,
    OreAlgebraError,
    ParseError,
    PreconditionError,
    ResourceBoundError,
    exit_code_for,
)
from src.utils.logging import (
    StructuredFormatter,
    TextFormatter,
    correlation_context,
    get_correlation_id,
)


@pytest.mark.unit
class TestConfig:
    """Test configuration loading."""

    def test_defaults(self):
        """Defaults validate without a file."""
        config = Config()
        assert config.algebra.word_bound == 12
        assert config.homology.i_max == 6

    def test_load_yaml(self, tmp_path):
        """Values from YAML override defaults."""
        path = tmp_path / "config.yaml"
        path.write_text("homology:\n  i_max: 3\ncompute:\n  seed: 9\n", encoding="utf-8")
        config = load_config(path)
        assert config.homology.i_max == 3
        assert config.compute.seed == 9

    def test_missing_file(self, tmp_path):
        """Missing files raise FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "absent.yaml")

    def test_invalid_values(self, tmp_path):
        """Out-of-range values raise ValueError."""
        path = tmp_path / "config.yaml"
        path.write_text("homology:\n  i_max: -1\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_config(path)

    def test_environment_overrides(self):
        """Environment overrides apply to a copy."""
        base = Config()
        updated = apply_environment(base, EnvironmentConfig(log_level="debug", jobs=2))
        assert updated.logging.level == "DEBUG"
        assert updated.compute.jobs == 2
        assert updated is not base


@pytest.mark.unit
class TestErrors:
    """Test the exception hierarchy."""

    @pytest.mark.parametrize(
        "error, code",
        [
            (CheckFailure("x"), 1),
            (PreconditionError("x"), 2),
            (ParseError("x"), 2),
            (ResourceBoundError("x"), 3),
            (RuntimeError("x"), 1),
        ],
    )
    def test_exit_codes(self, error, code):
        """Subclasses map onto process exit codes."""
        assert exit_code_for(error) == code

    def test_parse_error_position(self):
        """ParseError reports its position."""
        error = ParseError("unexpected token", position=4)
        assert str(error) == "unexpected token at position 4"
        assert error.code == "parse"
        assert isinstance(error, OreAlgebraError)


@pytest.mark.unit
class TestLogging:
    """Test formatters and correlation IDs."""

    def _record(self, **extra):
        record = logging.LogRecord("src.ore", logging.INFO, __file__, 1, "normal form", None, None)
        for key, value in extra.items():
            setattr(record, key, value)
        return record

    def test_structured_formatter(self):
        """JSON records carry message and data."""
        formatter = StructuredFormatter(["level", "module", "message", "data"])
        entry = json.loads(formatter.format(self._record(data={"p": 3})))
        assert entry["level"] == "INFO"
        assert entry["module"] == "src.ore"
        assert entry["data"] == {"p": 3}

    def test_text_formatter_appends_data(self):
        """Text records append the data payload."""
        line = TextFormatter().format(self._record(data={"p": 3}))
        assert "normal form" in line
        assert line.endswith('| Data: {"p": 3}')

    def test_correlation_context(self):
        """Correlation IDs nest and are restored."""
        with correlation_context("outer"):
            assert get_correlation_id() == "outer"
            with correlation_context("inner"):
                assert get_correlation_id() == "inner"
            assert get_correlation_id() == "outer"
        assert get_correlation_id() is None
