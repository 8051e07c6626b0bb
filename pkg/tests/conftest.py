from pathlib import Path

import pytest

from wonderaut import fixtures
from wonderaut.io import load_fixture_dir

DATA = Path(__file__).resolve().parent.parent / "src" / "wonderaut" / "data"


@pytest.fixture(scope="session")
def corpus():
    return fixtures.corpus()


@pytest.fixture(scope="session")
def shipped():
    return load_fixture_dir(DATA)
