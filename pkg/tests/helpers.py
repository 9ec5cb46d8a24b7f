import numpy as np
from hypothesis import strategies as st

from core.dominance import Point


def grid_points(n: int, p: int, seed: int, high: int = 50) -> list[Point]:
    """Случайные целые точки на малой сетке: много совпадений координат и дубликатов."""
    rng = np.random.default_rng(seed)
    return [tuple(row) for row in rng.integers(0, high, size=(n, p)).astype(np.float64).tolist()]


def brute_force_front(points) -> set[Point]:
    unique = np.unique(np.asarray(list(points), dtype=np.float64), axis=0)
    front = set()
    for z in unique:
        dominated = ((unique <= z).all(axis=1) & (unique < z).any(axis=1)).any()
        if not dominated:
            front.add(tuple(z.tolist()))
    return front


def point_strategy(p: int, high: int = 20):
    return st.tuples(*[st.integers(0, high).map(float) for _ in range(p)])


def stream_strategy(p: int, max_size: int = 60, high: int = 20):
    return st.lists(point_strategy(p, high), min_size=1, max_size=max_size)
