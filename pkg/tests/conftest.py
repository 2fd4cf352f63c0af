"""Pytest setup for local imports."""

import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURES_DIR = REPO_ROOT / "fixtures"


def pytest_configure(config):
    src_path = str(REPO_ROOT / "src")
    if src_path not in sys.path:
        sys.path.insert(0, src_path)


@pytest.fixture(autouse=True)
def fresh_state(monkeypatch):
    """Default configuration and an empty result cache for every test."""
    from oddcolor_lab.cache import get_result_cache
    from oddcolor_lab.config import reset_config

    for name in (
        "LOG_LEVEL",
        "ODDCOLOR_BUDGET_MS",
        "ODDCOLOR_JOBS",
        "ODDCOLOR_MAX_ENUM",
        "ODDCOLOR_SEED",
        "ODDCOLOR_CACHE",
    ):
        monkeypatch.delenv(name, raising=False)
    reset_config()
    get_result_cache().clear()
    yield
    reset_config()


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR
