"""Отношения доминирования по Парето (все критерии минимизируются) и счётчик сравнений."""
import math
from enum import Enum
from typing import Iterable, Optional, Sequence

from core.exceptions import DimensionMismatchError, InvalidPointError

Point = tuple[float, ...]


class DominanceOutcome(str, Enum):
    DOMINATES = "DOMINATES"
    DOMINATED_BY = "DOMINATED_BY"
    EQUAL = "EQUAL"
    INCOMPARABLE = "INCOMPARABLE"


DOMINATES = DominanceOutcome.DOMINATES
DOMINATED_BY = DominanceOutcome.DOMINATED_BY
EQUAL = DominanceOutcome.EQUAL
INCOMPARABLE = DominanceOutcome.INCOMPARABLE


def make_point(coords: Iterable[float]) -> Point:
    point = tuple(float(c) for c in coords)
    if len(point) < 2:
        raise InvalidPointError(f"Точка должна иметь не меньше двух критериев, получено {len(point)}")
    if not all(math.isfinite(c) for c in point):
        raise InvalidPointError(f"Точка содержит NaN или бесконечность: {point}")
    return point


def _compare(u: Sequence[float], v: Sequence[float]) -> DominanceOutcome:
    if len(u) != len(v):
        raise DimensionMismatchError(len(u), len(v))
    better = worse = False
    for a, b in zip(u, v):
        if a < b:
            if worse:
                return INCOMPARABLE
            better = True
        elif a > b:
            if better:
                return INCOMPARABLE
            worse = True
    if better:
        return DOMINATES
    if worse:
        return DOMINATED_BY
    return EQUAL


class ComparisonCounter:
    """
    Счётчик попарных сравнений точек за один прогон.

    Передаётся архиву явно при создании; каждый вызов compare/covers/dominates
    увеличивает count ровно на единицу (включая сравнения с приближёнными
    точками идеала/надира и с узлами Quad-tree).
    """
    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def compare(self, u: Sequence[float], v: Sequence[float]) -> DominanceOutcome:
        self.count += 1
        return _compare(u, v)

    def covers(self, u: Sequence[float], v: Sequence[float]) -> bool:
        self.count += 1
        outcome = _compare(u, v)
        return outcome is DOMINATES or outcome is EQUAL

    def dominates(self, u: Sequence[float], v: Sequence[float]) -> bool:
        self.count += 1
        return _compare(u, v) is DOMINATES

    def reset(self) -> int:
        count, self.count = self.count, 0
        return count


def compare(u: Sequence[float], v: Sequence[float], counter: Optional[ComparisonCounter] = None) -> DominanceOutcome:
    if counter is not None:
        return counter.compare(u, v)
    return _compare(u, v)


def covers(u: Sequence[float], v: Sequence[float], counter: Optional[ComparisonCounter] = None) -> bool:
    """u покрывает v: доминирует или совпадает."""
    if counter is not None:
        return counter.covers(u, v)
    outcome = _compare(u, v)
    return outcome is DOMINATES or outcome is EQUAL


def dominates(u: Sequence[float], v: Sequence[float], counter: Optional[ComparisonCounter] = None) -> bool:
    if counter is not None:
        return counter.dominates(u, v)
    return _compare(u, v) is DOMINATES
