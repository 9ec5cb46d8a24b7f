"""
Бенчмарк архивов: повторные прогоны потока с подсчётом сравнений и временем.

Каждый повтор получает независимую перестановку из SeedSequence(seed).spawn,
новый архив и новый счётчик. Время измеряется только вокруг обновлений архива.
"""
from concurrent.futures import ProcessPoolExecutor
from statistics import fmean
from time import perf_counter_ns
from typing import Iterable, Optional, Sequence, Union

import numpy as np
from attrs import define

from core.config import settings
from core.dominance import ComparisonCounter, Point
from core.exceptions import ArchiveMismatchError, ConfigurationError
from core.logging_config import logger
from models.archive import ArchiveBackend, NDTreeConfig
from models.dataset import PointStream
from models.metrics import RunMetrics, SweepResult
from services.archives import create_archive
from services.linear_list import LinearListArchive
from services.services import (
    ARCHIVE_SIZE,
    BENCH_COMPARISONS_TOTAL,
    BENCH_RUN_DURATION,
    BENCH_RUNS_TOTAL,
    VERIFICATION_FAILURES_TOTAL,
)


@define(slots=True, frozen=True)
class RepetitionTask:
    backend: ArchiveBackend
    points: Sequence[Point]
    order: Optional[list[int]]
    repetition: int
    trace: bool
    checkpoint_every: int
    ndtree_config: Optional[NDTreeConfig]


def permutations(n: int, repetitions: int, seed: int, shuffle: bool = True) -> list[Optional[list[int]]]:
    """Независимые перестановки по одной на повтор; None означает исходный порядок."""
    if not shuffle:
        return [None] * repetitions
    children = np.random.SeedSequence(seed).spawn(repetitions)
    return [np.random.Generator(np.random.PCG64(child)).permutation(n).tolist() for child in children]


def _run_repetition(task: RepetitionTask) -> tuple[RunMetrics, list[Point]]:
    points = task.points
    sequence = points if task.order is None else [points[i] for i in task.order]
    counter = ComparisonCounter()
    archive = create_archive(task.backend, dimension=len(points[0]), counter=counter,
                             ndtree_config=task.ndtree_config)
    update = archive.update
    every = task.checkpoint_every
    trace: Optional[list[int]] = [] if task.trace else None
    time_checkpoints: list[tuple[int, int]] = []
    size_checkpoints: list[tuple[int, int]] = []

    start = perf_counter_ns()
    for i, y in enumerate(sequence, 1):
        if trace is not None:
            before = counter.count
            update(y)
            trace.append(counter.count - before)
        else:
            update(y)
        if i % every == 0:
            time_checkpoints.append((i, perf_counter_ns() - start))
            size_checkpoints.append((i, len(archive)))
    wall_time_ns = perf_counter_ns() - start

    n = len(sequence)
    if n % every:
        time_checkpoints.append((n, wall_time_ns))
        size_checkpoints.append((n, len(archive)))

    metrics = RunMetrics(
        backend=task.backend,
        p=len(points[0]),
        n=n,
        seed=0,
        repetition=task.repetition,
        total_comparisons=counter.count,
        wall_time_ns=wall_time_ns,
        final_archive_size=len(archive),
        per_insert_comparisons=trace,
        time_checkpoints=time_checkpoints,
        size_checkpoints=size_checkpoints,
        ndtree_config=getattr(archive, "config", None),
    )
    return metrics, archive.points()


def _check_backend(backend: ArchiveBackend, p: int, ndtree_config: Optional[NDTreeConfig]):
    # несовместимость (sortedlist при p != 2, слишком малый лист) выясняется до прогона
    create_archive(backend, dimension=p, ndtree_config=ndtree_config)


def oracle_front(points: Iterable[Point]) -> set[Point]:
    oracle = LinearListArchive()
    oracle.extend(points)
    return set(oracle.points())


def run_stream(kind: Union[ArchiveBackend, str], stream: PointStream, repetitions: Optional[int] = None,
               shuffle: bool = True, seed: int = 0, verify: bool = False, workers: Optional[int] = None,
               trace: Optional[bool] = None, ndtree_config: Optional[NDTreeConfig] = None,
               checkpoint_every: Optional[int] = None) -> list[RunMetrics]:
    try:
        backend = ArchiveBackend(kind)
    except ValueError:
        raise ConfigurationError(f"Неизвестный архив '{kind}'") from None
    if not stream.points:
        raise ConfigurationError("Поток не содержит точек")
    repetitions = repetitions if repetitions is not None else settings.DEFAULT_REPETITIONS
    if repetitions < 1:
        raise ConfigurationError(f"Число повторов должно быть положительным, получено {repetitions}")
    workers = workers if workers is not None else settings.BENCH_WORKERS
    n, p = len(stream), stream.dimension
    trace = trace if trace is not None else n <= settings.TRACE_MAX_POINTS
    checkpoint_every = checkpoint_every or settings.CHECKPOINT_EVERY
    _check_backend(backend, p, ndtree_config)

    logger.info(f"Бенчмарк {backend.value}: n={n}, p={p}, повторов {repetitions}, "
                f"перемешивание={'да' if shuffle else 'нет'}, seed={seed}, процессов {workers}")
    tasks = [
        RepetitionTask(backend=backend, points=stream.points, order=order, repetition=r, trace=trace,
                       checkpoint_every=checkpoint_every, ndtree_config=ndtree_config)
        for r, order in enumerate(permutations(n, repetitions, seed, shuffle))
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_repetition, tasks))
    else:
        results = [_run_repetition(task) for task in tasks]

    expected = oracle_front(stream.points) if verify else None
    metrics_list = []
    for metrics, final_points in results:
        metrics.seed = seed
        metrics.spec = stream.spec
        metrics.contended_timing = workers > 1
        if expected is not None:
            actual = set(final_points)
            if actual != expected:
                VERIFICATION_FAILURES_TOTAL.labels(backend=backend.value).inc()
                logger.error(f"Повтор {metrics.repetition} архива {backend.value} расходится с эталоном")
                raise ArchiveMismatchError(backend.value, len(expected - actual), len(actual - expected))
            metrics.verified = True
        BENCH_RUNS_TOTAL.labels(backend=backend.value).inc()
        BENCH_COMPARISONS_TOTAL.labels(backend=backend.value).inc(metrics.total_comparisons)
        BENCH_RUN_DURATION.labels(backend=backend.value).observe(metrics.wall_time_ns / 1e9)
        ARCHIVE_SIZE.labels(backend=backend.value).set(metrics.final_archive_size)
        logger.debug(f"Повтор {metrics.repetition}: {metrics.total_comparisons} сравнений, "
                     f"{metrics.wall_time_ns / 1e6:.1f} мс, размер архива {metrics.final_archive_size}")
        metrics_list.append(metrics)

    logger.info(f"Бенчмарк {backend.value} завершён: в среднем "
                f"{fmean(m.total_comparisons for m in metrics_list):.0f} сравнений, "
                f"{fmean(m.wall_time_ns for m in metrics_list) / 1e6:.1f} мс на повтор")
    return metrics_list


def run_parameter_sweep(stream: PointStream, leaf_sizes: Sequence[int], children_counts: Sequence[int],
                        repetitions: Optional[int] = None, shuffle: bool = True,
                        seed: int = 0) -> list[SweepResult]:
    """Чувствительность ND-Tree к размеру листа и числу потомков."""
    results = []
    for max_leaf_size in leaf_sizes:
        for n_children in children_counts:
            if n_children > max_leaf_size + 1:
                logger.info(f"Пропуск комбинации: лист {max_leaf_size}, потомков {n_children}")
                continue
            config = NDTreeConfig(max_leaf_size=max_leaf_size, n_children=n_children)
            runs = run_stream(ArchiveBackend.NDTREE, stream, repetitions=repetitions, shuffle=shuffle,
                              seed=seed, trace=False, ndtree_config=config)
            results.append(SweepResult(
                max_leaf_size=max_leaf_size,
                n_children=n_children,
                repetitions=len(runs),
                mean_total_comparisons=fmean(m.total_comparisons for m in runs),
                mean_wall_time_ns=fmean(m.wall_time_ns for m in runs),
                final_archive_size=runs[0].final_archive_size,
            ))
    return results
