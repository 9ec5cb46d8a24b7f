"""
Quad-tree для архива Парето (вариант с повторной вставкой поддерева при удалении).

Точки хранятся и во внутренних узлах, и в листьях. Потомок узла x
индексируется битовой маской следования b: бит k равен 1, если
координата k точки не меньше координаты k точки x. Маски 0 (точка
доминирует x) и 2^p - 1 (x покрывает точку) среди взаимно
недоминируемых точек не встречаются.
"""
from typing import Iterator, Optional

from core.dominance import DOMINATED_BY, DOMINATES, EQUAL, ComparisonCounter, Point
from models.archive import REJECTED, ArchiveBackend, UpdateOutcome
from services.archive_base import ParetoArchive


def successorship(y: Point, x: Point) -> int:
    mask = 0
    for k, (a, b) in enumerate(zip(y, x)):
        if a >= b:
            mask |= 1 << k
    return mask


class QuadTreeNode:
    __slots__ = ("point", "children", "parent", "index")

    def __init__(self, point: Point, parent: Optional["QuadTreeNode"] = None, index: int = 0):
        self.point = point
        self.children: dict[int, QuadTreeNode] = {}
        self.parent = parent
        self.index = index  # маска этого узла относительно родителя

    def iter_points(self) -> Iterator[Point]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node.point
            stack.extend(node.children[b] for b in sorted(node.children, reverse=True))


class QuadTreeArchive(ParetoArchive):
    backend = ArchiveBackend.QUAD_TREE

    def __init__(self, dimension: Optional[int] = None, counter: Optional[ComparisonCounter] = None):
        super().__init__(dimension, counter)
        self.root: Optional[QuadTreeNode] = None
        self._size = 0
        self.reinserted = 0

    def __len__(self) -> int:
        return self._size

    def points(self) -> list[Point]:
        return list(self.root.iter_points()) if self.root is not None else []

    def update(self, y: Point) -> UpdateOutcome:
        self._check_dimension(y)
        if self.root is None:
            self.root = QuadTreeNode(y)
            self._size = 1
            return UpdateOutcome(accepted=True)

        dominated = self._search(y)
        if dominated is None:
            return REJECTED

        evicted = tuple(node.point for node in dominated)
        if dominated:
            self._remove(dominated)
        # без удалений путь y совпадает с потомками b = s, уже сравнёнными при поиске
        self._attach(y, counted=bool(dominated))
        self._size += 1 - len(evicted)
        return UpdateOutcome(accepted=True, evicted=evicted)

    def _search(self, y: Point) -> Optional[list[QuadTreeNode]]:
        """
        Один обход в глубину: ищет точку, покрывающую y, и точки, доминируемые y.

        Returns:
            None, если y покрыт; иначе узлы с доминируемыми точками в порядке обхода.
        """
        counter = self.counter
        full = (1 << self.dimension) - 1
        dominated: list[QuadTreeNode] = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            outcome = counter.compare(y, node.point)
            if outcome is DOMINATED_BY or outcome is EQUAL:
                return None
            if outcome is DOMINATES:
                dominated.append(node)
            s = successorship(y, node.point)
            for b, child in node.children.items():
                # покрывающая точка может лежать только в потомках b ⊆ s,
                # доминируемая только в потомках b ⊇ s
                if (not dominated and b & ~s & full == 0) or b & s == s:
                    stack.append(child)
        return dominated

    def _remove(self, dominated: list[QuadTreeNode]):
        doomed = {id(node) for node in dominated}
        survivors: list[Point] = []
        for node in dominated:
            if not self._is_attached(node):
                continue
            if node.parent is None:
                self.root = None
            else:
                del node.parent.children[node.index]
                node.parent = None
            survivors.extend(self._collect(node, doomed))
        self.reinserted += len(survivors)
        for z in survivors:
            self._attach(z, counted=True)

    def _is_attached(self, node: QuadTreeNode) -> bool:
        while node.parent is not None:
            node = node.parent
        return node is self.root

    @staticmethod
    def _collect(node: QuadTreeNode, doomed: set[int]) -> list[Point]:
        found = []
        stack = [node]
        while stack:
            current = stack.pop()
            if id(current) not in doomed:
                found.append(current.point)
            stack.extend(current.children[b] for b in sorted(current.children, reverse=True))
        return found

    def _attach(self, y: Point, counted: bool = False):
        """
        Навигация по маскам следования; y взаимно недоминируем со всеми точками дерева.

        При counted каждая маска относительно точки узла учитывается счётчиком
        как одно сравнение.
        """
        if self.root is None:
            self.root = QuadTreeNode(y)
            return
        node = self.root
        while True:
            if counted:
                self.counter.count += 1
            b = successorship(y, node.point)
            child = node.children.get(b)
            if child is None:
                node.children[b] = QuadTreeNode(y, parent=node, index=b)
                return
            node = child

    def violations(self) -> list[str]:
        """Нарушения инвариантов индексации (для тестов)."""
        found = []
        if self.root is None:
            return found
        full = (1 << self.dimension) - 1
        stack = [self.root]
        while stack:
            node = stack.pop()
            for b, child in node.children.items():
                if b == 0 or b == full:
                    found.append(f"недопустимая маска {b} у потомка узла {node.point}")
                if child.parent is not node or child.index != b:
                    found.append(f"нарушена связь родитель-потомок у {child.point}")
                for z in child.iter_points():
                    if successorship(z, node.point) != b:
                        found.append(f"{z} лежит в потомке {b} узла {node.point}")
                stack.append(child)
        return found
