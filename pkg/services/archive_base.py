from abc import ABC, abstractmethod
from typing import Iterable, Optional

from core.dominance import ComparisonCounter, Point
from core.exceptions import DimensionMismatchError, InvalidPointError
from models.archive import ArchiveBackend, UpdateOutcome


class ParetoArchive(ABC):
    """
    Общий интерфейс архива Парето (динамическая задача недоминируемости).

    Кандидат, покрытый хотя бы одной точкой архива, отклоняется; иначе он
    добавляется, а все доминируемые им точки удаляются. Дубликатов в архиве
    не бывает: равная точка покрывает кандидата.
    """
    backend: ArchiveBackend

    def __init__(self, dimension: Optional[int] = None, counter: Optional[ComparisonCounter] = None):
        if dimension is not None and dimension < 2:
            raise InvalidPointError(f"Размерность архива должна быть не меньше 2, получено {dimension}")
        self.dimension = dimension
        self.counter = counter if counter is not None else ComparisonCounter()

    def _check_dimension(self, y: Point):
        if self.dimension is None:
            if len(y) < 2:
                raise InvalidPointError(f"Точка должна иметь не меньше двух критериев: {y}")
            self.dimension = len(y)
            self._on_dimension_known(self.dimension)
        elif len(y) != self.dimension:
            raise DimensionMismatchError(self.dimension, len(y))

    def _on_dimension_known(self, dimension: int):
        """Хук для архивов, чьи параметры зависят от p."""

    @abstractmethod
    def update(self, y: Point) -> UpdateOutcome:
        ...

    @abstractmethod
    def points(self) -> list[Point]:
        ...

    @abstractmethod
    def __len__(self) -> int:
        ...

    def __contains__(self, y: Point) -> bool:
        return tuple(y) in set(self.points())

    def extend(self, points: Iterable[Point]) -> int:
        accepted = 0
        for y in points:
            if self.update(y).accepted:
                accepted += 1
        return accepted
