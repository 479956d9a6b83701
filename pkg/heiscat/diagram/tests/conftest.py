import sys
from pathlib import Path

import pytest

# Up to project root: conftest.py -> tests/ -> diagram/ -> heiscat/ -> root/
project_root = Path(__file__).parent.parent.parent.parent
sys.path.insert(0, str(project_root))

from heiscat.algebra.frobenius import builtin  # noqa: E402


@pytest.fixture
def trivial():
    return builtin("trivial")


@pytest.fixture
def clifford():
    return builtin("clifford")


@pytest.fixture
def dual_numbers():
    return builtin("dual_numbers")


@pytest.fixture
def zigzag():
    return builtin("zigzag_a2")
