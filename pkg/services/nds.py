"""
Недоминируемая сортировка снятием фронтов.

Первый фронт есть архив Парето всей популяции; он снимается, и процедура
повторяется для оставшихся точек. Для каждого фронта создаётся новый архив,
счётчик сравнений общий на всю сортировку.
"""
from typing import Optional, Sequence, Union

from core.dominance import ComparisonCounter, Point, make_point
from core.exceptions import EmptyPopulationError
from core.logging_config import logger
from models.archive import ArchiveBackend, NDTreeConfig
from models.fronts import FrontAssignment
from services.archives import create_archive


def _prepare(points: Sequence[Sequence[float]]) -> list[Point]:
    if not points:
        raise EmptyPopulationError("Популяция для сортировки пуста")
    return [make_point(point) for point in points]


def _assignment(population: list[Point], ranks: list[int], comparisons: int) -> FrontAssignment:
    fronts: list[list[Point]] = [[] for _ in range(max(ranks) + 1)]
    for point, rank in zip(population, ranks):
        fronts[rank].append(point)
    return FrontAssignment(fronts=fronts, ranks=ranks, comparisons=comparisons)


def nd_sort(points: Sequence[Sequence[float]], backend: Union[ArchiveBackend, str] = ArchiveBackend.NDTREE,
            counter: Optional[ComparisonCounter] = None,
            ndtree_config: Optional[NDTreeConfig] = None) -> FrontAssignment:
    population = _prepare(points)
    counter = counter if counter is not None else ComparisonCounter()
    start = counter.count

    # точные дубликаты получают фронт своего представителя
    first_index: dict[Point, int] = {}
    for point in population:
        first_index.setdefault(point, len(first_index))
    remaining = list(first_index)
    front_of: dict[Point, int] = {}

    front = 0
    while remaining:
        archive = create_archive(backend, dimension=len(remaining[0]), counter=counter,
                                 ndtree_config=ndtree_config)
        archive.extend(remaining)
        for point in archive.points():
            front_of[point] = front
        remaining = [point for point in remaining if point not in front_of]
        front += 1

    ranks = [front_of[point] for point in population]
    comparisons = counter.count - start
    logger.info(f"Сортировка {len(population)} точек ({ArchiveBackend(backend).value}): "
                f"{front} фронтов, {comparisons} сравнений")
    return _assignment(population, ranks, comparisons)


def brute_force_sort(points: Sequence[Sequence[float]],
                     counter: Optional[ComparisonCounter] = None) -> FrontAssignment:
    """Попарное снятие фронтов за O(N^2) на фронт; эталон для проверок."""
    population = _prepare(points)
    counter = counter if counter is not None else ComparisonCounter()
    start = counter.count
    ranks = [-1] * len(population)
    remaining = list(range(len(population)))
    front = 0
    while remaining:
        current = [
            i for i in remaining
            if not any(j != i and counter.dominates(population[j], population[i]) for j in remaining)
        ]
        for i in current:
            ranks[i] = front
        taken = set(current)
        remaining = [i for i in remaining if i not in taken]
        front += 1
    return _assignment(population, ranks, counter.count - start)
