from core.dominance import DOMINATED_BY, DOMINATES, EQUAL, Point
from models.archive import REJECTED, ArchiveBackend, UpdateOutcome
from services.archive_base import ParetoArchive


class LinearListArchive(ParetoArchive):
    """Простой список: кандидат сравнивается со всеми точками до первой покрывающей."""
    backend = ArchiveBackend.LIST

    def __init__(self, dimension=None, counter=None):
        super().__init__(dimension, counter)
        self._points: list[Point] = []

    def __len__(self) -> int:
        return len(self._points)

    def points(self) -> list[Point]:
        return list(self._points)

    def update(self, y: Point) -> UpdateOutcome:
        self._check_dimension(y)
        counter = self.counter
        dominated = []
        for i, z in enumerate(self._points):
            outcome = counter.compare(y, z)
            if outcome is DOMINATED_BY or outcome is EQUAL:
                return REJECTED
            if outcome is DOMINATES:
                dominated.append(i)

        evicted = tuple(self._points[i] for i in dominated)
        # удаление перестановкой с последним элементом; индексы обходятся с конца
        for i in reversed(dominated):
            last = self._points.pop()
            if i < len(self._points):
                self._points[i] = last
        self._points.append(y)
        return UpdateOutcome(accepted=True, evicted=evicted)
