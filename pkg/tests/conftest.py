"""Pytest configuration and common fixtures for all tests."""

# Add the src directory to Python path for imports
import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
src_path = project_root / "src"
sys.path.insert(0, str(src_path))

from solvcohom.builder import CATALOGUE, build_C, build_closure, preset
from solvcohom.core.config import EngineConfig
from solvcohom.decomposition import decompose


class _LazyCatalogue(dict):
    """Builds a catalogue object on first access and keeps it."""

    def __init__(self, factory):
        super().__init__()
        self._factory = factory

    def __missing__(self, key):
        family, case = key
        value = self._factory(family, case)
        self[key] = value
        return value


@pytest.fixture(scope="session")
def project_root_path() -> Path:
    """Get the project root path."""
    return project_root


@pytest.fixture(scope="session")
def catalogue_keys() -> list[tuple[str, str]]:
    """(family, case) for the fifteen catalogue manifolds."""
    return [(entry.family, entry.case) for entry in CATALOGUE]


@pytest.fixture(scope="session")
def splitting_data():
    """Splitting data per (family, case), built on demand."""
    return _LazyCatalogue(lambda family, case: preset(family, case))


@pytest.fixture(scope="session")
def c_complexes(splitting_data):
    """C = B + B̄ per (family, case)."""
    return _LazyCatalogue(lambda family, case: build_C(splitting_data[(family, case)]))


@pytest.fixture(scope="session")
def closures(splitting_data):
    """B ∧ B̄ per (family, case)."""
    return _LazyCatalogue(lambda family, case: build_closure(splitting_data[(family, case)]))


@pytest.fixture(scope="session")
def c_decompositions(c_complexes):
    """Verified decompositions of C per (family, case)."""
    return _LazyCatalogue(lambda family, case: decompose(c_complexes[(family, case)]))


@pytest.fixture
def default_config(tmp_path, monkeypatch) -> EngineConfig:
    """Built-in defaults, isolated from config files and environment."""
    monkeypatch.chdir(tmp_path)
    for variable in ("SOLVCOHOM_SCAN_BUDGET", "SOLVCOHOM_GOLDEN_WORKERS", "SOLVCOHOM_LOG_LEVEL"):
        monkeypatch.delenv(variable, raising=False)
    return EngineConfig()

