"""
Pytest configuration and shared group fixtures
"""
import os
import sys
from random import Random

import pytest
from hypothesis import HealthCheck, settings

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from wreathkit.config import ENV_PREFIX, reset_settings  # noqa: E402
from wreathkit.dsl import parse_group, parse_word  # noqa: E402

# every test runs with the settings isolation fixture below
settings.register_profile("wreathkit", deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("wreathkit")


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch, tmp_path):
    """Isolate every test from WREATHKIT_* variables and stray .env files"""
    for name in list(os.environ):
        if name.startswith(ENV_PREFIX):
            monkeypatch.delenv(name)
    empty_env = tmp_path / "empty.env"
    empty_env.write_text("")
    monkeypatch.setenv("DOTENV_PATH", str(empty_env))
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng():
    """Seeded random source so failures reproduce"""
    return Random(20240517)


@pytest.fixture
def lamplighter():
    return parse_group("wr(Z/2, Z)")


@pytest.fixture
def z2_wr_z3():
    return parse_group("wr(Z/2, Z/3)")


@pytest.fixture
def z2_wr_z4():
    return parse_group("wr(Z/2, Z/4)")


@pytest.fixture
def z_wr_z():
    return parse_group("wr(Z, Z)")


@pytest.fixture
def bs12():
    return parse_group("BS(1,2)")


@pytest.fixture
def s22():
    return parse_group("freesolvable(2,2)")


@pytest.fixture
def s32():
    return parse_group("freesolvable(3,2)")


@pytest.fixture
def element():
    """Evaluate a word given as text: element(group, "a1 t1^-1")"""

    def evaluate(group, text):
        return group.evaluate(parse_word(group, text))

    return evaluate
