import csv
from pathlib import Path
from typing import Iterable, Union

from prometheus_client import CollectorRegistry, write_to_textfile

from core.logging_config import logger
from models.metrics import RunMetrics, SweepResult

CSV_COLUMNS = [
    "backend", "shape", "p", "n", "epsilon", "seed", "repetition",
    "total_comparisons", "mean_comparisons_per_insert", "wall_time_ns", "final_archive_size",
]
SWEEP_COLUMNS = [
    "max_leaf_size", "n_children", "repetitions",
    "mean_total_comparisons", "mean_wall_time_ns", "final_archive_size",
]
CHECKPOINT_COLUMNS = ["backend", "repetition", "processed", "elapsed_ns", "archive_size"]
UNKNOWN = "na"

PathLike = Union[str, Path]


def _row(metrics: RunMetrics) -> list:
    spec = metrics.spec
    return [
        metrics.backend.value,
        spec.shape.value if spec is not None else UNKNOWN,
        metrics.p,
        metrics.n,
        spec.epsilon if spec is not None else UNKNOWN,
        metrics.seed,
        metrics.repetition,
        metrics.total_comparisons,
        f"{metrics.mean_comparisons_per_insert:.6f}",
        metrics.wall_time_ns,
        metrics.final_archive_size,
    ]


def write_csv(metrics: Iterable[RunMetrics], path: PathLike):
    """Одна строка на повтор; заголовок пишется всегда."""
    path = Path(path)
    count = 0
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for m in metrics:
            writer.writerow(_row(m))
            count += 1
    logger.info(f"Записано {count} строк метрик в {path}")


def write_sweep_csv(results: Iterable[SweepResult], path: PathLike):
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for r in results:
            writer.writerow([r.max_leaf_size, r.n_children, r.repetitions,
                             f"{r.mean_total_comparisons:.1f}", f"{r.mean_wall_time_ns:.1f}",
                             r.final_archive_size])


def write_checkpoints_csv(metrics: Iterable[RunMetrics], path: PathLike):
    """Траектория времени и размера архива по контрольным точкам каждого повтора."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CHECKPOINT_COLUMNS)
        for m in metrics:
            for (processed, elapsed), (_, size) in zip(m.time_checkpoints, m.size_checkpoints):
                writer.writerow([m.backend.value, m.repetition, processed, elapsed, size])


def write_metrics_file(registry: CollectorRegistry, path: PathLike):
    write_to_textfile(str(path), registry)
    logger.info(f"Метрики prometheus записаны в {path}")
