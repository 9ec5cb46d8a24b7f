import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from core.dominance import ComparisonCounter
from core.exceptions import ConfigurationError, EmptyArchiveError
from models.archive import ArchiveBackend
from services.archives import create_archive
from services.generators import gen_convex, gen_uniform
from services.kd_tree import KDTree
from services.linear_list import LinearListArchive
from services.mfront import MFrontArchive
from services.quad_tree import QuadTreeArchive, successorship
from services.sorted_list import SortedListArchive
from tests.helpers import brute_force_front, grid_points, stream_strategy

GENERAL_BACKENDS = [b for b in ArchiveBackend if b is not ArchiveBackend.SORTED_LIST]


@pytest.mark.parametrize("backend", list(ArchiveBackend))
def test_empty_archive_accepts(backend):
    archive = create_archive(backend)
    outcome = archive.update((3.0, 4.0))
    assert outcome.accepted
    assert archive.points() == [(3.0, 4.0)]
    assert (3.0, 4.0) in archive
    assert len(archive) == 1


@pytest.mark.parametrize("backend", GENERAL_BACKENDS)
def test_three_point_example(backend, three_points):
    archive = create_archive(backend)
    archive.extend(three_points)
    assert not archive.update((1.0, 1.0, 2.0)).accepted
    outcome = archive.update((1.0, 1.0, 0.0))
    assert outcome.accepted
    assert set(outcome.evicted) == {(1.0, 1.0, 1.0), (2.0, 2.0, 0.0)}
    assert set(archive.points()) == {(1.0, 1.0, 0.0), (0.0, 2.0, 2.0)}


@pytest.mark.parametrize("backend", list(ArchiveBackend))
def test_equal_point_is_rejected(backend):
    archive = create_archive(backend)
    archive.update((2.0, 2.0))
    outcome = archive.update((2.0, 2.0))
    assert not outcome.accepted
    assert len(archive) == 1


@pytest.mark.parametrize("backend", GENERAL_BACKENDS)
@pytest.mark.parametrize("p, seed", [(2, 1), (3, 2), (4, 3), (6, 4), (10, 5)])
def test_matches_oracle(backend, p, seed):
    points = grid_points(1000, p, seed)
    archive = create_archive(backend)
    archive.extend(points)
    assert set(archive.points()) == brute_force_front(points)
    assert len(archive) == len(archive.points())


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_random_streams_match_oracle(seed):
    n = (100, 1000, 10_000)[seed % 3]
    p = 2 + seed % 9
    points = gen_convex(n, p, seed=seed) if seed % 2 == 0 else gen_uniform(n, p, seed=seed)
    expected = brute_force_front(points)
    for backend in list(ArchiveBackend) if p == 2 else GENERAL_BACKENDS:
        archive = create_archive(backend)
        archive.extend(points)
        assert set(archive.points()) == expected, backend.value


@pytest.mark.parametrize("seed", range(3))
def test_sorted_list_matches_oracle(seed):
    points = grid_points(2000, 2, seed, high=500)
    archive = SortedListArchive()
    archive.extend(points)
    assert set(archive.points()) == brute_force_front(points)


@hypothesis_settings(max_examples=50, deadline=None)
@given(st.sampled_from(list(ArchiveBackend)), stream_strategy(2, max_size=80, high=15))
def test_all_backends_agree_on_biobjective_streams(backend, points):
    archive = create_archive(backend)
    archive.extend(points)
    assert set(archive.points()) == brute_force_front(points)


def test_linear_list_full_scan_cost():
    counter = ComparisonCounter()
    archive = LinearListArchive(counter=counter)
    archive.extend([(float(i), float(10 - i)) for i in range(5)])
    counter.reset()
    assert archive.update((2.5, 7.5)).accepted
    assert counter.count == 5


def test_sorted_list_examples():
    archive = SortedListArchive()
    archive.extend([(1.0, 5.0), (3.0, 3.0), (5.0, 1.0)])
    outcome = archive.update((2.0, 2.0))
    assert outcome.accepted
    assert outcome.evicted == ((3.0, 3.0),)
    assert archive.points() == [(1.0, 5.0), (2.0, 2.0), (5.0, 1.0)]

    archive = SortedListArchive()
    archive.update((1.0, 5.0))
    assert not archive.update((2.0, 6.0)).accepted
    assert archive.points() == [(1.0, 5.0)]


def test_sorted_list_tie_on_first_objective():
    archive = SortedListArchive()
    archive.extend([(1.0, 5.0), (3.0, 3.0)])
    assert not archive.update((3.0, 4.0)).accepted
    outcome = archive.update((3.0, 1.0))
    assert outcome.accepted
    assert outcome.evicted == ((3.0, 3.0),)
    assert archive.points() == [(1.0, 5.0), (3.0, 1.0)]


def test_sorted_list_stays_bisorted():
    archive = SortedListArchive()
    for y in grid_points(1000, 2, seed=9, high=200):
        archive.update(y)
        points = archive.points()
        assert all(a[0] < b[0] and a[1] > b[1] for a, b in zip(points, points[1:]))


def test_sorted_list_requires_two_objectives():
    with pytest.raises(ConfigurationError):
        SortedListArchive(dimension=3)
    archive = SortedListArchive(dimension=None)
    with pytest.raises(ConfigurationError):
        archive.update((1.0, 2.0, 3.0))


def test_successorship_mask():
    assert successorship((1.0, 2.0, 3.0), (1.0, 3.0, 0.0)) == 0b101
    assert successorship((0.0, 0.0), (1.0, 1.0)) == 0


def test_quad_tree_rejects_after_one_comparison():
    counter = ComparisonCounter()
    archive = QuadTreeArchive(counter=counter)
    archive.update((5.0, 5.0))
    assert not archive.update((6.0, 6.0)).accepted
    assert counter.count == 1


def test_quad_tree_index_invariants():
    archive = QuadTreeArchive()
    points = grid_points(1000, 3, seed=21)
    for i, y in enumerate(points):
        archive.update(y)
        if i % 50 == 0:
            assert archive.violations() == []
    assert archive.violations() == []
    assert set(archive.points()) == brute_force_front(points)


def test_quad_tree_reinserts_subtree_of_dominated_node():
    archive = QuadTreeArchive()
    archive.extend([(5.0, 5.0), (2.0, 8.0), (8.0, 2.0), (1.0, 9.0)])
    outcome = archive.update((4.0, 4.0))
    assert outcome.evicted == ((5.0, 5.0),)
    assert set(archive.points()) == {(4.0, 4.0), (2.0, 8.0), (8.0, 2.0), (1.0, 9.0)}
    assert archive.reinserted == 3
    assert archive.violations() == []


def test_quad_tree_counts_reinsertion_navigation():
    counter = ComparisonCounter()
    archive = QuadTreeArchive(counter=counter)
    archive.extend([(5.0, 5.0), (2.0, 8.0), (8.0, 2.0), (1.0, 9.0)])
    before = counter.count
    archive.update((4.0, 4.0))
    # поиск 3, повторная вставка (8,2), (2,8), (1,9): 0 + 1 + 2, путь (4,4) в новом дереве 2
    assert counter.count - before == 8


def test_quad_tree_plain_insert_counts_search_only():
    counter = ComparisonCounter()
    archive = QuadTreeArchive(counter=counter)
    archive.extend([(5.0, 5.0), (2.0, 8.0)])
    before = counter.count
    archive.update((8.0, 2.0))
    assert counter.count - before == 1


def test_mfront_examples():
    archive = MFrontArchive()
    assert archive.update((2.0, 3.0)).accepted
    assert not archive.update((2.0, 3.0)).accepted
    assert archive.approx_nearest((0.0, 0.0)) == (2.0, 3.0)


def test_mfront_empty_archive_has_no_reference():
    with pytest.raises(EmptyArchiveError):
        MFrontArchive(dimension=2).approx_nearest((0.0, 0.0))


def test_mfront_indexes_stay_sorted_permutations():
    archive = MFrontArchive()
    for y in grid_points(1000, 4, seed=13):
        archive.update(y)
    members = set(archive.points())
    for k, index in enumerate(archive._indexes):
        assert {z for _, z in index} == members
        assert len(index) == len(members)
        assert all(value == z[k] for value, z in index)
        assert [value for value, _ in index] == sorted(value for value, _ in index)
    assert set(archive.kd_tree.iter_points()) == members


def test_mfront_reference_is_member():
    archive = MFrontArchive()
    archive.extend(gen_convex(500, 3, seed=4))
    for y in grid_points(50, 3, seed=5, high=10000):
        assert archive.approx_nearest(y) in archive


def test_kd_tree_nearest_examples():
    tree = KDTree(2)
    tree.insert((4.0, 4.0))
    assert tree.approx_nearest((100.0, -3.0)) == (4.0, 4.0)

    tree = KDTree(2)
    tree.insert((0.0, 0.0))
    tree.insert((10.0, 10.0))
    assert tree.root.split == 5.0
    assert tree.approx_nearest((1.0, 1.0)) == (0.0, 0.0)


def test_kd_tree_split_uses_next_differing_axis():
    tree = KDTree(3)
    tree.insert((1.0, 2.0, 3.0))
    tree.insert((1.0, 5.0, 3.0))
    assert tree.root.axis == 1
    assert tree.root.split == 3.5


def test_kd_tree_distance_budget():
    tree = KDTree(2, distance_budget=4)
    for i in range(64):
        tree.insert((float(i), float(64 - i)))
    tree.approx_nearest((30.3, 33.1))
    assert tree.distance_evaluations <= 4


def test_kd_tree_tombstones_and_rebuild():
    tree = KDTree(2, rebuild_ratio=0.5)
    points = [(float(i), float(20 - i)) for i in range(10)]
    for z in points:
        tree.insert(z)
    for z in points[:5]:
        assert tree.delete(z)
    assert tree.rebuilds == 0
    assert tree.dead == 5
    assert tree.delete(points[5])
    assert tree.rebuilds == 1
    assert tree.dead == 0
    assert sorted(tree.iter_points()) == sorted(points[6:])
    assert not tree.delete(points[0])


def test_kd_tree_empty_raises():
    tree = KDTree(2)
    with pytest.raises(EmptyArchiveError):
        tree.approx_nearest((0.0, 0.0))
