import pytest

from qschemoid.errors import SearchCapExceeded, UniverseTooLarge
from qschemoid.search import SearchLimits, bfs_path, check_universe, connected_components


def _adjacent(u, v):
    # a path graph 0-1-2 plus the edge 4-5; 3 isolated
    return {u, v} in ({0, 1}, {1, 2}, {4, 5})


def test_components_and_threads():
    expected = [[0, 1, 2], [3], [4, 5]]
    assert connected_components(6, _adjacent) == expected
    assert connected_components(6, _adjacent, threads=3) == expected


def test_bfs_path():
    path = bfs_path(0, 2, 6, lambda u, v: "e" if _adjacent(u, v) else None)
    assert [node for node, _ in path] == [1, 2]
    assert bfs_path(0, 0, 6, _adjacent) == []
    assert bfs_path(0, 3, 6, _adjacent) is None


def test_caps():
    limits = SearchLimits(max_objects=2, max_universe=5)
    with pytest.raises(SearchCapExceeded):
        limits.check_objects(3)
    with pytest.raises(UniverseTooLarge):
        check_universe(6, limits)
    check_universe(5, limits)
