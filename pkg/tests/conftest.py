import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from simulroots import NormParameter
from simulroots.corpus import builtin_corpus


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture(scope="session")
def norm_inf():
    return NormParameter.of(math.inf)


@pytest.fixture(scope="session")
def norm_one():
    return NormParameter.of(1)


@pytest.fixture(scope="session")
def norm_two():
    return NormParameter.of(2)
