import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from plyalg.terms import Alphabet


@pytest.fixture(scope="session")
def A1():
    return Alphabet.of_size(1)


@pytest.fixture(scope="session")
def A2():
    return Alphabet.of_size(2)


@pytest.fixture(scope="session")
def A3():
    return Alphabet.of_size(3)
