import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import build_quasi_tree_corpus, build_small_complex_corpus  # noqa: E402


@pytest.fixture(scope="session")
def quasi_tree_corpus():
    return build_quasi_tree_corpus()


@pytest.fixture(scope="session")
def small_complex_corpus():
    return build_small_complex_corpus()
