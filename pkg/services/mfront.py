"""
M-Front-II: архив с индексами по каждому критерию и k-d деревом для опорной точки.

Для кандидата y берётся приближённый ближайший сосед ref. Покрывающая точка z
может найтись только там, где z_k лежит в [ref_k, y_k] для критериев с
ref_k <= y_k; доминируемая там, где z_k лежит в [y_k, ref_k] для остальных.
Диапазоны просматриваются двоичным поиском по отсортированным индексам,
каждая точка сравнивается с кандидатом не больше одного раза.
"""
from bisect import bisect_left, insort
from typing import Iterator, Optional

from core.dominance import DOMINATED_BY, DOMINATES, EQUAL, ComparisonCounter, Point
from core.exceptions import EmptyArchiveError
from models.archive import REJECTED, ArchiveBackend, UpdateOutcome
from services.archive_base import ParetoArchive
from services.kd_tree import KDTree


class MFrontArchive(ParetoArchive):
    backend = ArchiveBackend.MFRONT2

    def __init__(self, dimension: Optional[int] = None, counter: Optional[ComparisonCounter] = None,
                 distance_budget: Optional[int] = None):
        self._distance_budget = distance_budget
        self._members: set[Point] = set()
        self._indexes: list[list[tuple[float, Point]]] = []
        self.kd_tree: Optional[KDTree] = None
        super().__init__(dimension, counter)
        if dimension is not None:
            self._on_dimension_known(dimension)

    def _on_dimension_known(self, dimension: int):
        self._indexes = [[] for _ in range(dimension)]
        self.kd_tree = KDTree(dimension, distance_budget=self._distance_budget)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, y: Point) -> bool:
        return tuple(y) in self._members

    def points(self) -> list[Point]:
        if not self._indexes:
            return []
        return [z for _, z in self._indexes[0]]

    def approx_nearest(self, y: Point) -> Point:
        if not self._members:
            raise EmptyArchiveError("Архив пуст: опорную точку выбрать не из чего")
        return self.kd_tree.approx_nearest(y)

    def _walk(self, k: int, low: float, high: float) -> Iterator[Point]:
        index = self._indexes[k]
        i = bisect_left(index, (low,))
        while i < len(index) and index[i][0] <= high:
            yield index[i][1]
            i += 1

    def update(self, y: Point) -> UpdateOutcome:
        self._check_dimension(y)
        if not self._members:
            self._add(y)
            return UpdateOutcome(accepted=True)

        ref = self.approx_nearest(y)
        counter = self.counter
        upper = [(k, ref[k], y[k]) for k in range(self.dimension) if ref[k] <= y[k]]
        lower = [(k, y[k], ref[k]) for k in range(self.dimension) if ref[k] > y[k]]

        seen: set[Point] = set()
        dominated: list[Point] = []
        # сначала диапазоны, где может лежать покрывающая точка
        for k, low, high in upper + lower:
            for z in self._walk(k, low, high):
                if z in seen:
                    continue
                seen.add(z)
                outcome = counter.compare(y, z)
                if outcome is DOMINATED_BY or outcome is EQUAL:
                    return REJECTED
                if outcome is DOMINATES:
                    dominated.append(z)

        for z in dominated:
            self._discard(z)
        self._add(y)
        return UpdateOutcome(accepted=True, evicted=tuple(dominated))

    def _add(self, y: Point):
        self._members.add(y)
        for k, index in enumerate(self._indexes):
            insort(index, (y[k], y))
        self.kd_tree.insert(y)

    def _discard(self, z: Point):
        self._members.remove(z)
        for k, index in enumerate(self._indexes):
            del index[bisect_left(index, (z[k], z))]
        self.kd_tree.delete(z)
