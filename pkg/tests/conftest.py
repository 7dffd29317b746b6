import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from selgames import discrete_space, singleton_family

settings.register_profile("repeatable", derandomize=True, deadline=None)
settings.load_profile("repeatable")


@pytest.fixture
def d2():
    return discrete_space(2)


@pytest.fixture
def d3():
    return discrete_space(3)


@pytest.fixture
def singles2(d2):
    return singleton_family(d2)


@pytest.fixture
def singles3(d3):
    return singleton_family(d3)
