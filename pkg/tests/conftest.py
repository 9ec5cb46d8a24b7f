import pytest

from core.dominance import ComparisonCounter
from tests.helpers import brute_force_front, grid_points


@pytest.fixture
def counter():
    return ComparisonCounter()


@pytest.fixture
def make_points():
    return grid_points


@pytest.fixture
def oracle():
    return brute_force_front


@pytest.fixture
def three_points():
    return [(1.0, 1.0, 1.0), (0.0, 2.0, 2.0), (2.0, 2.0, 0.0)]
