import numpy as np

from core.dominance import Point, covers, dominates
from models.archive import AuditViolation, UpdateOutcome
from services.nd_tree import NDTree, NDTreeNode

DOMINANCE_BLOCK = 256


def audit(tree: NDTree, check_dominance: bool = True) -> list[AuditViolation]:
    """
    Проверяет структурные инварианты ND-Tree.

    Размеры листьев и число потомков, ссылки на родителя, покрытие точек
    приближёнными идеалом и надиром, вложенность границ потомка в границы
    родителя, учёт размера архива и (опционально) взаимную недоминируемость
    всех точек. Сравнения здесь не учитываются счётчиком архива.
    """
    violations: list[AuditViolation] = []
    if tree.root is None:
        if len(tree) != 0:
            violations.append(AuditViolation(path="root", rule="size",
                                             detail=f"пустое дерево, но размер {len(tree)}"))
        return violations

    config = tree.config
    root = tree.root
    if root.parent is not None:
        violations.append(AuditViolation(path="root", rule="parent", detail="у корня есть родитель"))

    total = 0
    stack: list[tuple[NDTreeNode, str]] = [(root, "root")]
    while stack:
        node, path = stack.pop()
        if node.children is None:
            size = len(node.points)
            total += size
            if not 1 <= size <= config.max_leaf_size:
                violations.append(AuditViolation(
                    path=path, rule="leaf_size",
                    detail=f"{size} точек при допустимых 1..{config.max_leaf_size}"))
        else:
            if not 2 <= len(node.children) <= config.n_children:
                violations.append(AuditViolation(
                    path=path, rule="children",
                    detail=f"{len(node.children)} потомков при допустимых 2..{config.n_children}"))
            for i, child in enumerate(node.children):
                child_path = f"{path}/{i}"
                if child.parent is not node:
                    violations.append(AuditViolation(path=child_path, rule="parent",
                                                     detail="ссылка на родителя не совпадает"))
                if not covers(node.ideal, child.ideal) or not covers(child.nadir, node.nadir):
                    violations.append(AuditViolation(
                        path=child_path, rule="containment",
                        detail=f"границы потомка {child.ideal}..{child.nadir} "
                               f"выходят за границы родителя {node.ideal}..{node.nadir}"))
                stack.append((child, child_path))
        violations.extend(_bounds_violations(node, path))

    if total != len(tree):
        violations.append(AuditViolation(path="root", rule="size",
                                         detail=f"в листьях {total} точек, учтено {len(tree)}"))
    if check_dominance:
        violations.extend(_dominance_violations(tree.points()))
    return violations


def audit_update(tree: NDTree, y: Point, outcome: UpdateOutcome) -> list[AuditViolation]:
    """
    Проверка одного обновления за O(N) без полного попарного прохода.

    Принятая y должна быть в архиве и не покрывать другие точки и не быть
    покрытой ими, вытесненные точки должны доминироваться y и отсутствовать в
    архиве. Отклонённую y должна покрывать хотя бы одна точка архива.
    """
    points = tree.points()
    found: list[AuditViolation] = []
    if points:
        coords = np.asarray(points, dtype=np.float64)
        target = np.asarray(y, dtype=np.float64)
        covering = (coords <= target).all(axis=1)
        covered = (coords >= target).all(axis=1)
    else:
        covering = covered = np.zeros(0, dtype=bool)

    if not outcome.accepted:
        if not covering.any():
            found.append(AuditViolation(path="archive", rule="rejection",
                                        detail=f"{y} отклонена, но ни одна точка архива её не покрывает"))
        return found

    same = covering & covered
    if not same.any():
        found.append(AuditViolation(path="archive", rule="acceptance",
                                    detail=f"принятая {y} отсутствует в архиве"))
    for j in np.flatnonzero(covering & ~same):
        found.append(AuditViolation(path="archive", rule="mutual_nondominance",
                                    detail=f"{points[j]} покрывает принятую {y}"))
    for j in np.flatnonzero(covered & ~same):
        found.append(AuditViolation(path="archive", rule="mutual_nondominance",
                                    detail=f"принятая {y} покрывает {points[j]}"))
    members = set(points)
    for z in outcome.evicted:
        if not dominates(y, z):
            found.append(AuditViolation(path="archive", rule="eviction",
                                        detail=f"{z} вытеснена, но {y} её не доминирует"))
        if z in members:
            found.append(AuditViolation(path="archive", rule="eviction",
                                        detail=f"вытесненная {z} осталась в архиве"))
    return found


def _bounds_violations(node: NDTreeNode, path: str) -> list[AuditViolation]:
    found = []
    for z in node.iter_points():
        if not covers(node.ideal, z):
            found.append(AuditViolation(path=path, rule="ideal",
                                        detail=f"идеал {node.ideal} не покрывает {z}"))
        if not covers(z, node.nadir):
            found.append(AuditViolation(path=path, rule="nadir",
                                        detail=f"{z} не покрывает надир {node.nadir}"))
    return found


def _dominance_violations(points: list[Point]) -> list[AuditViolation]:
    if len(points) < 2:
        return []
    found = []
    coords = np.asarray(points, dtype=np.float64)
    n = len(coords)
    for start in range(0, n, DOMINANCE_BLOCK):
        block = coords[start:start + DOMINANCE_BLOCK]
        # covered[i, j]: точка j покрывает точку start + i
        covered = np.ones((len(block), n), dtype=bool)
        for k in range(coords.shape[1]):
            covered &= coords[None, :, k] <= block[:, None, k]
        rows = np.arange(len(block))
        covered[rows, rows + start] = False
        for i in np.flatnonzero(covered.any(axis=1)):
            j = int(np.flatnonzero(covered[i])[0])
            found.append(AuditViolation(
                path="archive", rule="mutual_nondominance",
                detail=f"{points[j]} покрывает {points[start + int(i)]}"))
    return found


def worst_case_stream(k: int) -> list[Point]:
    """Поток, строящий полностью несбалансированное дерево при max_leaf_size=2 и двух потомках."""
    if k < 1:
        raise ValueError(f"k должно быть не меньше 1, получено {k}")
    stream = [(0.0, 0.0), (1.0, -1.0)]
    stream.extend((float(2 ** j), -float(2 ** j)) for j in range(k, 0, -1))
    return stream
