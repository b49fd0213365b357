import pytest

from textchar.lexicons import load_manifest
from textchar.metrics import default_registry
from textchar.pipeline import Pipeline


@pytest.fixture(scope="session")
def pipeline():
    return Pipeline.load()


@pytest.fixture(scope="session")
def store():
    return load_manifest()


@pytest.fixture(scope="session")
def registry():
    return default_registry()
