"""Pytest configuration and shared fixtures."""

import numpy as np
import pytest
from click.testing import CliRunner

from src.ore import AlgebraContext
from src.utils.config import get_config


@pytest.fixture
def config():
    """Provide test configuration."""
    return get_config()


@pytest.fixture
def rng():
    """Seeded generator for randomized tests."""
    return np.random.default_rng(0)


@pytest.fixture
def ctx_g():
    """p = 3, lambda = g: t = 0, lambda a unit."""
    return AlgebraContext.create(3, 1, "g")


@pytest.fixture
def ctx_g_minus_one():
    """p = 3, lambda = g - 1: t = 1, lambda in the radical."""
    return AlgebraContext.create(3, 1, "g - 1")


@pytest.fixture
def ctx_one():
    """p = 3, lambda = 1: the Weyl-like t = 1 case."""
    return AlgebraContext.create(3, 1, "1")


@pytest.fixture
def ctx_one_plus_g():
    """p = 3, lambda = 1 + g: t = 1, lambda a unit."""
    return AlgebraContext.create(3, 1, "1 + g")


@pytest.fixture
def ctx_singular():
    """p = 3, lambda = g^2 - g: t = 0, lambda in the radical."""
    return AlgebraContext.create(3, 1, "g^2 - g")


@pytest.fixture
def ctx_rank_two():
    """p = 3, r = 2, lambda = g1."""
    return AlgebraContext.create(3, 2, "g1")


@pytest.fixture
def cli_runner():
    """Click test runner."""
    return CliRunner()


# Test markers
def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "slow: Slow running tests")
