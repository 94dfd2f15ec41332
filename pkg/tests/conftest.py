# tests/conftest.py
# Shared fixtures for the test suite

import pytest

from config.settings import get_settings
from state.semigroup_state import SuzukiParams
from utils.logging_setup import configure_logging


@pytest.fixture(autouse=True, scope="session")
def quiet_logging():
    configure_logging("WARNING")


@pytest.fixture
def params_8() -> SuzukiParams:
    return SuzukiParams.from_q(8)


@pytest.fixture
def params_32() -> SuzukiParams:
    return SuzukiParams.from_q(32)


@pytest.fixture
def fresh_settings():
    """Clear the settings cache around a test that patches the environment"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
