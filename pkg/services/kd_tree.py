"""
k-d дерево для поиска опорной точки M-Front-II.

Ссылки на точки хранятся только в листьях, внутренние узлы держат ось и
значение разбиения. Поиск ближайшего соседа: обычный спуск с возвратом,
оборванный после заданного числа вычислений расстояния. Удаление помечает
лист как мёртвый; при избытке мёртвых листьев дерево перестраивается.
"""
import math
from typing import Iterator, Optional

from core.config import settings
from core.dominance import Point
from core.exceptions import EmptyArchiveError
from core.logging_config import logger


class KDNode:
    __slots__ = ("axis", "split", "left", "right", "point", "alive")

    def __init__(self, point: Optional[Point] = None):
        self.point = point
        self.alive = point is not None
        self.axis = 0
        self.split = 0.0
        self.left: Optional[KDNode] = None
        self.right: Optional[KDNode] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None


class KDTree:
    def __init__(self, dimension: int, distance_budget: Optional[int] = None,
                 rebuild_ratio: Optional[float] = None):
        self.dimension = dimension
        self.distance_budget = distance_budget if distance_budget is not None else settings.KD_TREE_DISTANCE_BUDGET
        self.rebuild_ratio = rebuild_ratio if rebuild_ratio is not None else settings.KD_TREE_REBUILD_RATIO
        self.root: Optional[KDNode] = None
        self.leaves = 0
        self.dead = 0
        self.rebuilds = 0
        self.distance_evaluations = 0

    def __len__(self) -> int:
        return self.leaves - self.dead

    def _find_leaf(self, y: Point) -> tuple[KDNode, int]:
        node, depth = self.root, 0
        while node.left is not None:
            node = node.left if y[node.axis] < node.split else node.right
            depth += 1
        return node, depth

    def insert(self, y: Point):
        if self.root is None:
            self.root = KDNode(y)
            self.leaves = 1
            return
        leaf, depth = self._find_leaf(y)
        if not leaf.alive:
            leaf.point = y
            leaf.alive = True
            self.dead -= 1
            return

        q = leaf.point
        axis = depth % self.dimension
        # на текущей оси координаты могут совпасть: берём следующую различающуюся
        for shift in range(self.dimension):
            candidate = (axis + shift) % self.dimension
            if y[candidate] != q[candidate]:
                axis = candidate
                break
        low, high = sorted((y, q), key=lambda point: point[axis])
        split = (low[axis] + high[axis]) / 2
        if not low[axis] < split:
            split = high[axis]

        leaf.point = None
        leaf.alive = False
        leaf.axis = axis
        leaf.split = split
        leaf.left = KDNode(low)
        leaf.right = KDNode(high)
        self.leaves += 1

    def delete(self, y: Point) -> bool:
        if self.root is None:
            return False
        leaf, _ = self._find_leaf(y)
        if not leaf.alive or leaf.point != y:
            return False
        leaf.alive = False
        self.dead += 1
        if self.dead > self.rebuild_ratio * self.leaves:
            self.rebuild()
        return True

    def iter_points(self) -> Iterator[Point]:
        if self.root is None:
            return
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.left is None:
                if node.alive:
                    yield node.point
            else:
                stack.append(node.right)
                stack.append(node.left)

    def rebuild(self):
        live = list(self.iter_points())
        logger.debug(f"Перестройка k-d дерева: {len(live)} живых листьев, {self.dead} мёртвых")
        self.root = None
        self.leaves = 0
        self.dead = 0
        self.rebuilds += 1
        for point in live:
            self.insert(point)

    def approx_nearest(self, y: Point) -> Point:
        """Приближённый ближайший сосед: не более distance_budget вычислений расстояния."""
        best: Optional[Point] = None
        best_distance = math.inf
        evaluations = 0
        stack: list[tuple[KDNode, float]] = [(self.root, -1.0)] if self.root is not None else []
        while stack:
            node, plane = stack.pop()
            if plane >= 0.0 and plane >= best_distance:
                continue
            if node.left is None:
                if node.alive:
                    distance = math.dist(node.point, y)
                    evaluations += 1
                    if distance < best_distance:
                        best, best_distance = node.point, distance
                    if evaluations >= self.distance_budget:
                        break
                continue
            diff = y[node.axis] - node.split
            near, far = (node.left, node.right) if diff < 0 else (node.right, node.left)
            stack.append((far, abs(diff)))
            stack.append((near, -1.0))
        self.distance_evaluations += evaluations
        if best is None:
            raise EmptyArchiveError("k-d дерево не содержит живых точек")
        return best
