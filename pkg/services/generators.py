"""
Генераторы искусственных наборов данных.

Выпуклые наборы состоят из целочисленных точек из сферического слоя вокруг угла
(V, ..., V) гиперкуба [0, V]^p; толщина слоя задаётся ε (уровень качества).
Невыпуклые получаются сменой знака, кластеризованные выборкой групп
ближайших соседей из вдвое большего выпуклого пула.
"""
from typing import Optional, Sequence, Union

import numpy as np

from core.config import settings
from core.dominance import Point
from core.logging_config import logger
from models.dataset import GeneratorSpec, PointStream, Shape


def _rng(seed: Union[int, np.random.SeedSequence]) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _to_points(values: np.ndarray) -> list[Point]:
    return [tuple(row) for row in values.astype(np.float64).tolist()]


def _sample_shell(rng: np.random.Generator, n: int, p: int, v_max: int, epsilon: float,
                  batch: Optional[int] = None) -> np.ndarray:
    """
    Отбор с отклонением: равномерные целые точки, пока n из них не попадут в слой.

    Каждая координата берёт ровно одно 64-битное значение генератора:
    принятые точки не зависят от размера пакета.
    """
    if n == 0:
        return np.empty((0, p), dtype=np.int64)
    batch = batch or settings.GENERATOR_BATCH
    outer = v_max * v_max
    inner = (1.0 - epsilon) * outer
    accepted: list[np.ndarray] = []
    found = drawn = 0
    while found < n:
        uniform = rng.random((batch, p))
        candidates = np.minimum((uniform * (v_max + 1)).astype(np.int64), v_max)
        radius = ((v_max - candidates) ** 2).sum(axis=1)
        inside = candidates[(radius >= inner) & (radius <= outer)]
        drawn += batch
        if len(inside):
            accepted.append(inside[:n - found])
            found += len(accepted[-1])
    logger.debug(f"Слой p={p} ε={epsilon}: принято {n} из {drawn} кандидатов")
    return np.concatenate(accepted)


def gen_convex(n: int, p: int, seed: int = 0, v_max: Optional[int] = None,
               epsilon: Optional[float] = None) -> list[Point]:
    v_max = v_max if v_max is not None else settings.DEFAULT_V_MAX
    epsilon = epsilon if epsilon is not None else settings.DEFAULT_EPSILON
    return _to_points(_sample_shell(_rng(seed), n, p, v_max, epsilon))


def gen_nonconvex(n: int, p: int, seed: int = 0, v_max: Optional[int] = None,
                  epsilon: Optional[float] = None) -> list[Point]:
    v_max = v_max if v_max is not None else settings.DEFAULT_V_MAX
    epsilon = epsilon if epsilon is not None else settings.DEFAULT_EPSILON
    # смена знака у целых, чтобы не получить -0.0
    return _to_points(-_sample_shell(_rng(seed), n, p, v_max, epsilon))


def gen_clustered(clusters: int, cluster_size: int, p: int, seed: int = 0,
                  v_max: Optional[int] = None, epsilon: Optional[float] = None) -> list[Point]:
    """
    Кластеризованный набор из clusters групп по cluster_size точек.

    Из пула 2n выпуклых точек clusters раз выбирается случайная оставшаяся
    точка; она и её cluster_size - 1 ближайших оставшихся соседей образуют
    кластер и удаляются из пула. При равных расстояниях берётся точка с
    меньшим индексом в пуле.
    """
    v_max = v_max if v_max is not None else settings.DEFAULT_V_MAX
    epsilon = epsilon if epsilon is not None else settings.DEFAULT_EPSILON
    n = clusters * cluster_size
    # пул и выбор центров берут независимые потоки одного seed
    pool_seed, center_seed = np.random.SeedSequence(seed).spawn(2)
    pool = _sample_shell(_rng(pool_seed), 2 * n, p, v_max, epsilon).astype(np.float64)
    rng = _rng(center_seed)
    alive = np.ones(len(pool), dtype=bool)
    chosen: list[np.ndarray] = []
    for _ in range(clusters):
        remaining = np.flatnonzero(alive)
        center = remaining[rng.integers(len(remaining))]
        others = remaining[remaining != center]
        distances = ((pool[others] - pool[center]) ** 2).sum(axis=1)
        nearest = others[np.argsort(distances, kind="stable")[:cluster_size - 1]]
        members = np.concatenate(([center], nearest))
        alive[members] = False
        chosen.append(pool[members])
    return _to_points(np.concatenate(chosen))


def gen_uniform(n: int, p: int, seed: int = 0, v_max: Optional[int] = None) -> list[Point]:
    """Равномерная популяция в гиперкубе [0, V]^p (случайные популяции для сортировки)."""
    v_max = v_max if v_max is not None else settings.DEFAULT_V_MAX
    return _to_points(_rng(seed).integers(0, v_max, size=(n, p), endpoint=True, dtype=np.int64))


def sample_population(points: Sequence[Point], size: int, seed: int = 0) -> list[Point]:
    """Равномерная выборка без возвращения из готового набора."""
    if size > len(points):
        raise ValueError(f"Нельзя выбрать {size} точек из {len(points)}")
    picked = _rng(seed).choice(len(points), size=size, replace=False)
    return [points[i] for i in picked.tolist()]


def generate(spec: GeneratorSpec) -> PointStream:
    logger.info(f"Генерация набора {spec.shape.value}: n={spec.n}, p={spec.p}, ε={spec.epsilon}, seed={spec.seed}")
    if spec.shape is Shape.CONVEX:
        points = gen_convex(spec.n, spec.p, spec.seed, spec.v_max, spec.epsilon)
    elif spec.shape is Shape.NONCONVEX:
        points = gen_nonconvex(spec.n, spec.p, spec.seed, spec.v_max, spec.epsilon)
    else:
        points = gen_clustered(spec.clusters, spec.cluster_size, spec.p, spec.seed, spec.v_max, spec.epsilon)
    return PointStream(spec=spec, points=points)
