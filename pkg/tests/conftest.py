"""
Shared fixtures for the test suite.
"""

import pytest

from config.settings import Settings, settings
from src.parameters import ParameterSet, random_generic


@pytest.fixture
def restore_settings():
    """Yield the global settings and put every field back afterwards."""
    snapshot = settings.model_dump()
    yield settings
    settings.apply(Settings(**snapshot))


@pytest.fixture
def generic_params():
    """Factory for well-separated random parameters."""

    def make(m: int, seed: int) -> ParameterSet:
        return random_generic(m, seed, margin=0.05)

    return make


@pytest.fixture
def gauss_params() -> ParameterSet:
    """Real m = 1 parameters: a = (0.3, 0.45), b = (0, 0.7)."""
    return ParameterSet.create(a=[0.3, 0.45], b_tail=[0.7])
