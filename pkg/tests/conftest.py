from pathlib import Path

import pytest

from ribbonbound.model import parse_ribbon_code
from ribbonbound.oracle import standard_corpus

EXAMPLE_PATH = Path(__file__).parent / "data" / "example.rib"


@pytest.fixture(scope="session")
def example_text() -> str:
    return EXAMPLE_PATH.read_text(encoding="utf-8")


@pytest.fixture
def example_code(example_text):
    return parse_ribbon_code(example_text)


@pytest.fixture
def example_file(tmp_path, example_text) -> Path:
    path = tmp_path / "example.rib"
    path.write_text(example_text, encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus(1000)
