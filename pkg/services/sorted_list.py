from bisect import bisect_left
from operator import itemgetter
from typing import Optional

from core.dominance import DOMINATES, ComparisonCounter, Point
from core.exceptions import ConfigurationError
from models.archive import REJECTED, ArchiveBackend, UpdateOutcome
from services.archive_base import ParetoArchive

_first = itemgetter(0)


class SortedListArchive(ParetoArchive):
    """
    Двухкритериальный архив, отсортированный по первому критерию.

    Для взаимно недоминируемых точек порядок по возрастанию первого критерия
    совпадает с порядком по убыванию второго, поэтому позицию кандидата
    находит двоичный поиск, а доминируемые им точки идут сразу за ней.
    """
    backend = ArchiveBackend.SORTED_LIST

    def __init__(self, dimension: Optional[int] = 2, counter: Optional[ComparisonCounter] = None):
        if dimension is not None and dimension != 2:
            raise ConfigurationError(f"Отсортированный список поддерживает только p=2, получено p={dimension}")
        super().__init__(dimension, counter)
        self._points: list[Point] = []

    def _on_dimension_known(self, dimension: int):
        if dimension != 2:
            raise ConfigurationError(f"Отсортированный список поддерживает только p=2, получено p={dimension}")

    def __len__(self) -> int:
        return len(self._points)

    def points(self) -> list[Point]:
        return list(self._points)

    def update(self, y: Point) -> UpdateOutcome:
        self._check_dimension(y)
        points = self._points
        if not points:
            points.append(y)
            return UpdateOutcome(accepted=True)

        counter = self.counter
        i = bisect_left(points, y[0], key=_first)
        evicted = []
        if i < len(points) and points[i][0] == y[0]:
            # совпадение по первому критерию решается отношением покрытия
            z = points[i]
            if counter.compare(y, z) is not DOMINATES:
                return REJECTED
            evicted.append(z)
            del points[i]
        elif i > 0 and counter.covers(points[i - 1], y):
            return REJECTED

        points.insert(i, y)
        j = i + 1
        while j < len(points) and counter.dominates(y, points[j]):
            j += 1
        evicted.extend(points[i + 1:j])
        del points[i + 1:j]
        return UpdateOutcome(accepted=True, evicted=tuple(evicted))
