import pytest

from grasscy.pipeline import run_case
from grasscy.registry import registry_load


@pytest.fixture(scope="session")
def registry():
    return registry_load()


@pytest.fixture(scope="session")
def reports(registry):
    """Full pipeline reports for all six cases, computed once."""
    return {name: run_case(rc) for name, rc in registry.items()}
