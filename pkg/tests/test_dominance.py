import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.dominance import (
    DOMINATED_BY,
    DOMINATES,
    EQUAL,
    INCOMPARABLE,
    ComparisonCounter,
    compare,
    covers,
    dominates,
    make_point,
)
from core.exceptions import DimensionMismatchError, InvalidPointError
from services.nd_tree import NDTree
from services.sorted_list import SortedListArchive
from tests.helpers import grid_points, point_strategy


class TracingCounter(ComparisonCounter):
    __slots__ = ("calls",)

    def __init__(self):
        super().__init__()
        self.calls = []

    def compare(self, u, v):
        self.calls.append(("compare", u, v))
        return super().compare(u, v)

    def covers(self, u, v):
        self.calls.append(("covers", u, v))
        return super().covers(u, v)

    def dominates(self, u, v):
        self.calls.append(("dominates", u, v))
        return super().dominates(u, v)


@pytest.mark.parametrize("u, v, expected", [
    ((1, 1, 0), (1, 1, 1), DOMINATES),
    ((1, 1, 1), (1, 1, 1), EQUAL),
    ((2, 0, 1), (1, 1, 1), INCOMPARABLE),
    ((1, 1, 2), (1, 1, 1), DOMINATED_BY),
])
def test_compare_examples(u, v, expected):
    assert compare(u, v) is expected


def test_covers_and_dominates_examples():
    assert covers((1, 1, 1), (1, 1, 2))
    assert covers((1, 1, 1), (1, 1, 1))
    assert covers((0, 1, 0), (0, 3, 0))
    assert dominates((1, 1, 0), (2, 2, 0))
    assert not dominates((1, 1, 1), (1, 1, 1))
    assert not dominates((0, 2, 2), (2, 2, 0))


def test_dimension_mismatch_is_value_error():
    with pytest.raises(DimensionMismatchError) as exc_info:
        compare((1, 2), (1, 2, 3))
    assert isinstance(exc_info.value, ValueError)
    assert exc_info.value.expected == 2
    assert exc_info.value.actual == 3


def test_counter_increments_once_per_call(counter):
    counter.compare((0, 1), (1, 0))
    counter.covers((0, 1), (0, 1))
    counter.dominates((0, 0), (1, 1))
    assert counter.count == 3
    assert counter.reset() == 3
    assert counter.count == 0


def test_module_functions_count_only_with_counter(counter):
    compare((0, 1), (1, 0))
    covers((0, 1), (1, 0), counter=counter)
    dominates((0, 1), (1, 0), counter=counter)
    assert counter.count == 2


@pytest.mark.parametrize("coords", [(1.0,), (1.0, math.nan), (math.inf, 0.0)])
def test_make_point_rejects_invalid(coords):
    with pytest.raises(InvalidPointError):
        make_point(coords)


def test_make_point_converts_to_float_tuple():
    assert make_point([1, 2, 3]) == (1.0, 2.0, 3.0)


@given(point_strategy(4), point_strategy(4))
def test_antisymmetry(u, v):
    forward, backward = compare(u, v), compare(v, u)
    assert (forward is DOMINATES) == (backward is DOMINATED_BY)
    assert (forward is EQUAL) == (backward is EQUAL)
    assert (forward is INCOMPARABLE) == (backward is INCOMPARABLE)


@given(point_strategy(3, high=4), point_strategy(3, high=4), point_strategy(3, high=4))
def test_coverage_is_transitive(u, v, w):
    if covers(u, v) and covers(v, w):
        assert covers(u, w)


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_counter_matches_traced_calls(seed):
    counter = TracingCounter()
    tree = NDTree(counter=counter)
    tree.extend(grid_points(80, 3, seed))
    assert counter.count == len(counter.calls)


def test_counter_matches_traced_calls_for_sorted_list():
    counter = TracingCounter()
    archive = SortedListArchive(counter=counter)
    archive.extend(grid_points(200, 2, seed=5))
    assert counter.count == len(counter.calls)
    assert {name for name, _, _ in counter.calls} <= {"compare", "covers", "dominates"}
