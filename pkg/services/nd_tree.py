"""
ND-Tree: архив Парето в виде дерева гиперпрямоугольников.

Каждый узел хранит приближённые локальные точки идеала и надира своего
поднабора S(n). Сравнение кандидата только с этими двумя точками позволяет
отклонить кандидата (надир покрывает его), удалить весь поднабор (кандидат
покрывает идеал) или пропустить поддерево (кандидат несравним с обеими).
"""
import math
from typing import Iterator, Optional

import numpy as np

from core.dominance import (
    DOMINATED_BY,
    DOMINATES,
    EQUAL,
    ComparisonCounter,
    Point,
)
from core.logging_config import logger
from models.archive import REJECTED, ArchiveBackend, NDTreeConfig, UpdateOutcome
from services.archive_base import ParetoArchive


class NDTreeNode:
    __slots__ = ("ideal", "nadir", "points", "children", "parent")

    def __init__(self, point: Point, parent: Optional["NDTreeNode"] = None):
        self.ideal: list[float] = list(point)
        self.nadir: list[float] = list(point)
        self.points: Optional[list[Point]] = [point]
        self.children: Optional[list["NDTreeNode"]] = None
        self.parent = parent

    @property
    def is_leaf(self) -> bool:
        return self.children is None

    @property
    def is_empty(self) -> bool:
        return self.children is None and not self.points

    @property
    def middle(self) -> list[float]:
        return [(a + b) * 0.5 for a, b in zip(self.ideal, self.nadir)]

    def clear(self):
        self.points = []
        self.children = None

    def iter_points(self) -> Iterator[Point]:
        stack = [self]
        while stack:
            node = stack.pop()
            if node.children is None:
                yield from node.points
            else:
                stack.extend(reversed(node.children))


class NDTree(ParetoArchive):
    backend = ArchiveBackend.NDTREE

    def __init__(self, dimension: Optional[int] = None, counter: Optional[ComparisonCounter] = None,
                 config: Optional[NDTreeConfig] = None):
        self._requested_config = config if config is not None else NDTreeConfig()
        self.config: Optional[NDTreeConfig] = None
        super().__init__(dimension, counter)
        if dimension is not None:
            self._on_dimension_known(dimension)
        self.root: Optional[NDTreeNode] = None
        self._size = 0
        self._evicted: list[Point] = []
        self.split_count = 0

    def _on_dimension_known(self, dimension: int):
        self.config = self._requested_config.resolve(dimension)

    def __len__(self) -> int:
        return self._size

    def points(self) -> list[Point]:
        if self.root is None:
            return []
        return list(self.root.iter_points())

    def update(self, y: Point) -> UpdateOutcome:
        self._check_dimension(y)
        if self.root is None:
            self.root = NDTreeNode(y)
            self._size = 1
            return UpdateOutcome(accepted=True)

        self._evicted = []
        if not self.update_node(self.root, y):
            return REJECTED

        self._normalize_root()
        if self.root is None:
            # y покрыл идеал корня и вытеснил весь архив
            self.root = NDTreeNode(y)
        else:
            self.insert(self.root, y)
        evicted = tuple(self._evicted)
        self._evicted = []
        self._size += 1 - len(evicted)
        return UpdateOutcome(accepted=True, evicted=evicted)

    def _normalize_root(self):
        root = self.root
        if root.is_empty:
            self.root = None
        elif root.children is not None and len(root.children) == 1:
            child = root.children[0]
            child.parent = None
            self.root = child

    def update_node(self, node: NDTreeNode, y: Point) -> bool:
        """
        Проверяет y относительно поддерева узла и удаляет доминируемые им точки.

        Returns:
            False, если y покрыт какой-либо точкой поддерева, иначе True.
        """
        counter = self.counter
        to_nadir = counter.compare(y, node.nadir)
        if to_nadir is DOMINATED_BY or to_nadir is EQUAL:
            return False
        to_ideal = counter.compare(y, node.ideal)
        if to_ideal is DOMINATES or to_ideal is EQUAL:
            self._evicted.extend(node.iter_points())
            node.clear()
            return True
        if to_ideal is not DOMINATED_BY and to_nadir is not DOMINATES:
            # y несравним и с идеалом, и с надиром: поддерево можно пропустить
            return True

        if node.children is None:
            survivors = []
            dominated = []
            for z in node.points:
                outcome = counter.compare(y, z)
                if outcome is DOMINATED_BY or outcome is EQUAL:
                    return False
                if outcome is DOMINATES:
                    dominated.append(z)
                else:
                    survivors.append(z)
            if dominated:
                node.points = survivors
                self._evicted.extend(dominated)
            return True

        survivors = []
        for child in node.children:
            if not self.update_node(child, y):
                return False
            if child.is_empty:
                continue
            if child.children is not None and len(child.children) == 1:
                # единственный оставшийся потомок занимает место узла, границы не пересчитываются
                child = child.children[0]
                child.parent = node
            survivors.append(child)
        if survivors:
            node.children = survivors
        else:
            node.clear()
        return True

    @staticmethod
    def _closest_child(children: list[NDTreeNode], y: Point) -> NDTreeNode:
        best = children[0]
        best_distance = math.dist(best.middle, y)
        for child in children[1:]:
            distance = math.dist(child.middle, y)
            if distance < best_distance:
                best, best_distance = child, distance
        return best

    def insert(self, node: NDTreeNode, y: Point):
        while node.children is not None:
            node = self._closest_child(node.children, y)
        node.points.append(y)
        self.update_ideal_nadir(node, y)
        if len(node.points) > self.config.max_leaf_size:
            self.split(node)

    def split(self, node: NDTreeNode):
        points = node.points
        coords = np.asarray(points, dtype=np.float64)
        distances = np.sqrt(((coords[:, None, :] - coords[None, :, :]) ** 2).sum(axis=2))

        # средние расстояния сравниваются через суммы: делитель одинаков для всех кандидатов
        first = int(np.argmax(distances.sum(axis=1)))
        seeds = [first]
        remaining = [i for i in range(len(points)) if i != first]
        children = [NDTreeNode(points[first], parent=node)]
        while len(children) < self.config.n_children:
            scores = distances[np.ix_(remaining, seeds)].sum(axis=1)
            pick = remaining.pop(int(np.argmax(scores)))
            seeds.append(pick)
            children.append(NDTreeNode(points[pick], parent=node))

        node.points = None
        node.children = children
        for i in remaining:
            z = points[i]
            child = self._closest_child(children, z)
            child.points.append(z)
            self.update_ideal_nadir(child, z)
        self.split_count += 1
        logger.debug(f"Расщепление листа ND-Tree на {len(children)} потомков (всего расщеплений {self.split_count})")

    @staticmethod
    def update_ideal_nadir(node: NDTreeNode, y: Point):
        while node is not None:
            changed = False
            ideal, nadir = node.ideal, node.nadir
            for k, value in enumerate(y):
                if value < ideal[k]:
                    ideal[k] = value
                    changed = True
                if value > nadir[k]:
                    nadir[k] = value
                    changed = True
            if not changed:
                break
            node = node.parent

    def iter_nodes(self) -> Iterator[tuple[NDTreeNode, int]]:
        """Обход узлов в глубину: (узел, глубина), корень на глубине 1."""
        if self.root is None:
            return
        stack = [(self.root, 1)]
        while stack:
            node, depth = stack.pop()
            yield node, depth
            if node.children is not None:
                stack.extend((child, depth + 1) for child in reversed(node.children))

    def depth(self) -> int:
        return max((depth for _, depth in self.iter_nodes()), default=0)

    def node_count(self) -> int:
        return sum(1 for _ in self.iter_nodes())

    def leaf_count(self) -> int:
        return sum(1 for node, _ in self.iter_nodes() if node.children is None)
