"""
Команды CLI: generate, bench, sort, audit, worst-case, sweep.

Коды выхода: 0 при успехе, 1 при расхождении с эталоном или нарушении инвариантов,
2 при ошибке использования (флаги, конфигурация, формат файла).
"""
import functools
from pathlib import Path
from typing import Optional

import click
from pydantic import ValidationError

from core.config import settings
from core.exceptions import (
    ArchiveMismatchError,
    ConfigurationError,
    DimensionMismatchError,
    InvalidPointError,
    StreamFormatError,
)
from core.logging_config import logger
from crud.metrics_crud import write_checkpoints_csv, write_csv, write_metrics_file, write_sweep_csv
from crud.stream_crud import read_stream, write_fronts, write_stream
from models.archive import ArchiveBackend, NDTreeConfig
from models.dataset import GeneratorSpec, PointStream, Shape
from services.bench import run_parameter_sweep, run_stream
from services.generators import generate as generate_stream
from services.nd_tree import NDTree
from services.nd_tree_audit import audit as audit_tree, audit_update, worst_case_stream
from services.nds import brute_force_sort, nd_sort
from services.services import BENCH_REGISTRY

BRUTE_FORCE = "bruteforce"
ALL_BACKENDS = "all"

# ошибки входных данных и параметров считаются ошибками использования (код 2)
USAGE_ERRORS = (ConfigurationError, StreamFormatError, ValidationError, DimensionMismatchError, InvalidPointError)

input_path = click.option("--in", "in_path", required=True,
                          type=click.Path(exists=True, dir_okay=False, path_type=Path),
                          help="Файл потока точек")


def usage_errors(command):
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except USAGE_ERRORS as e:
            logger.error(f"Ошибка использования: {e}")
            raise click.UsageError(str(e)) from e
    return wrapper


def _ndtree_config(max_leaf_size: Optional[int], children: Optional[int]) -> NDTreeConfig:
    kwargs = {}
    if max_leaf_size is not None:
        kwargs["max_leaf_size"] = max_leaf_size
    if children is not None:
        kwargs["n_children"] = children
    return NDTreeConfig(**kwargs)


def _int_list(ctx, param, value: str) -> list[int]:
    try:
        values = [int(token) for token in value.split(",") if token.strip()]
    except ValueError:
        raise click.BadParameter(f"ожидался список целых через запятую, получено {value!r}") from None
    if not values:
        raise click.BadParameter("список пуст")
    return values


@click.group()
def cli():
    """ND-Tree и базовые архивы Парето: генерация данных, бенчмарки, сортировка."""


@cli.command()
@click.option("--shape", type=click.Choice([s.value for s in Shape]), default=Shape.CONVEX.value, show_default=True)
@click.option("--n", "n", type=int, default=None, help="Число точек (для clustered по умолчанию clusters * cluster-size)")
@click.option("--p", "p", type=int, required=True, help="Число критериев")
@click.option("--vmax", type=int, default=settings.DEFAULT_V_MAX, show_default=True)
@click.option("--epsilon", type=float, default=settings.DEFAULT_EPSILON, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--clusters", type=int, default=settings.DEFAULT_CLUSTERS, show_default=True)
@click.option("--cluster-size", type=int, default=settings.DEFAULT_CLUSTER_SIZE, show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False, path_type=Path))
@usage_errors
def generate(shape, n, p, vmax, epsilon, seed, clusters, cluster_size, out_path):
    """Генерирует поток точек и сообщает число недоминируемых среди них."""
    if n is None:
        if shape != Shape.CLUSTERED.value:
            raise click.UsageError("--n обязателен для форм convex и nonconvex")
        n = clusters * cluster_size
    spec = GeneratorSpec(n=n, p=p, v_max=vmax, epsilon=epsilon, shape=shape, seed=seed,
                         clusters=clusters, cluster_size=cluster_size)
    # лист вмещает p + 1 потомков при любом p, файл пишется только после проверки конфигурации
    archive = NDTree(dimension=p, config=NDTreeConfig(max_leaf_size=max(settings.DEFAULT_MAX_LEAF_SIZE, p)))
    stream = generate_stream(spec)
    write_stream(stream, out_path)
    archive.extend(stream.points)
    click.echo(f"{out_path}: {len(stream)} точек, недоминируемых {len(archive)}")


@cli.command()
@input_path
@click.option("--backend", type=click.Choice([b.value for b in ArchiveBackend] + [ALL_BACKENDS]),
              default=ArchiveBackend.NDTREE.value, show_default=True)
@click.option("--reps", type=int, default=settings.DEFAULT_REPETITIONS, show_default=True)
@click.option("--shuffle/--no-shuffle", default=True, show_default=True)
@click.option("--verify", is_flag=True, help="Сверить итоговый архив с эталонным линейным списком")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--max-leaf-size", type=int, default=None, help="ND-Tree: размер листа (по умолчанию 20)")
@click.option("--children", type=int, default=None, help="ND-Tree: число потомков (по умолчанию p + 1)")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--workers", type=int, default=settings.BENCH_WORKERS, show_default=True)
@click.option("--trace/--no-trace", default=None, help="Сохранять число сравнений по каждой вставке")
@click.option("--checkpoints", "checkpoints_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--metrics-file", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.pass_context
@usage_errors
def bench(ctx, in_path, backend, reps, shuffle, verify, csv_path, max_leaf_size, children, seed, workers,
          trace, checkpoints_path, metrics_file):
    """Прогоняет поток через выбранные архивы и записывает метрики."""
    stream = read_stream(in_path)
    if backend == ALL_BACKENDS:
        backends = [b for b in ArchiveBackend if b is not ArchiveBackend.SORTED_LIST or stream.dimension == 2]
    else:
        backends = [ArchiveBackend(backend)]
    config = _ndtree_config(max_leaf_size, children)

    all_metrics = []
    try:
        for kind in backends:
            runs = run_stream(kind, stream, repetitions=reps, shuffle=shuffle, seed=seed, verify=verify,
                              workers=workers, trace=trace, ndtree_config=config)
            all_metrics.extend(runs)
            mean_comparisons = sum(m.total_comparisons for m in runs) / len(runs)
            mean_ms = sum(m.wall_time_ns for m in runs) / len(runs) / 1e6
            click.echo(f"{kind.value}: {mean_comparisons:.0f} сравнений, {mean_ms:.1f} мс, "
                       f"архив {runs[-1].final_archive_size}" + (", проверено" if verify else ""))
    except ArchiveMismatchError as e:
        click.echo(str(e), err=True)
        ctx.exit(1)
    finally:
        if metrics_file is not None:
            write_metrics_file(BENCH_REGISTRY, metrics_file)

    if csv_path is not None:
        write_csv(all_metrics, csv_path)
    if checkpoints_path is not None:
        write_checkpoints_csv(all_metrics, checkpoints_path)


@cli.command(name="sort")
@input_path
@click.option("--backend", type=click.Choice([b.value for b in ArchiveBackend] + [BRUTE_FORCE]),
              default=ArchiveBackend.NDTREE.value, show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False, path_type=Path))
@usage_errors
def sort_command(in_path, backend, out_path):
    """Недоминируемая сортировка популяции из файла."""
    stream = read_stream(in_path)
    if backend == BRUTE_FORCE:
        assignment = brute_force_sort(stream.points)
    else:
        assignment = nd_sort(stream.points, backend=backend)
    write_fronts(assignment, out_path)
    click.echo(f"фронтов: {assignment.front_count}, сравнений: {assignment.comparisons}")


@cli.command(name="audit")
@input_path
@click.option("--max-leaf-size", type=int, default=None)
@click.option("--children", type=int, default=None)
@click.option("--check-every", type=click.IntRange(min=0), default=0, show_default=True,
              help="Проверять дерево и последнее обновление каждые K обновлений (0: только в конце)")
@click.pass_context
@usage_errors
def audit_command(ctx, in_path, max_leaf_size, children, check_every):
    """Строит ND-Tree из потока и проверяет его инварианты."""
    stream = read_stream(in_path)
    tree = NDTree(dimension=stream.dimension, config=_ndtree_config(max_leaf_size, children))
    violations = []
    for i, y in enumerate(stream.points, 1):
        outcome = tree.update(y)
        if check_every and i % check_every == 0:
            # попарная недоминируемость в промежутке только для последней точки, полная в конце
            violations = audit_update(tree, y, outcome) + audit_tree(tree, check_dominance=False)
            if violations:
                logger.error(f"Нарушения инвариантов после {i} обновлений")
                break
    if not violations:
        violations = audit_tree(tree)

    click.echo(f"размер архива: {len(tree)}, глубина дерева: {tree.depth()}, "
               f"узлов: {tree.node_count()}, листьев: {tree.leaf_count()}")
    if violations:
        for v in violations:
            click.echo(f"{v.path}: {v.rule}: {v.detail}", err=True)
        ctx.exit(1)


@cli.command(name="worst-case")
@click.option("--k", "k", type=click.IntRange(min=1), required=True)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False, path_type=Path))
def worst_case_command(k, out_path):
    """Записывает поток, строящий вырожденную цепочку ND-Tree (лист 2, два потомка)."""
    stream = PointStream(points=worst_case_stream(k))
    write_stream(stream, out_path)
    click.echo(f"{out_path}: {len(stream)} точек")


@cli.command()
@input_path
@click.option("--leaf-sizes", callback=_int_list, default="5,10,20", show_default=True)
@click.option("--children", callback=_int_list, default="2,4,6", show_default=True)
@click.option("--reps", type=int, default=settings.DEFAULT_REPETITIONS, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), required=True)
@usage_errors
def sweep(in_path, leaf_sizes, children, reps, seed, csv_path):
    """Чувствительность ND-Tree к размеру листа и числу потомков."""
    stream = read_stream(in_path)
    results = run_parameter_sweep(stream, leaf_sizes, children, repetitions=reps, seed=seed)
    write_sweep_csv(results, csv_path)
    for r in results:
        click.echo(f"лист {r.max_leaf_size}, потомков {r.n_children}: {r.mean_total_comparisons:.0f} сравнений")
