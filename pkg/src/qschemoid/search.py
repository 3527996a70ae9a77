"""Search caps and the graph routines shared by the homotopy searches."""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence, TypeVar

from .errors import SearchCapExceeded, UniverseTooLarge

T = TypeVar("T", bound=Hashable)


@dataclass(frozen=True)
class SearchLimits:
    max_objects: int = 8
    max_universe: int = 20000

    def check_objects(self, n: int, what: str = "schemoid") -> None:
        if n > self.max_objects:
            raise SearchCapExceeded(
                f"{what} has {n} objects, above the cap of {self.max_objects}",
                size=n, cap=self.max_objects,
            )


DEFAULT_LIMITS = SearchLimits()


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("QSCHEMOID_THREADS", "1")))
    except ValueError:
        return 1


def bfs_path(start: int, goal: int, n: int,
             adjacent: Callable[[int, int], object]) -> list[tuple[int, object]] | None:
    """Shortest path from ``start`` to ``goal`` in an implicit undirected graph.

    ``adjacent(u, v)`` returns a truthy edge label or a falsy value. Nodes are
    ``0..n-1``. The result is a list of ``(node, label)`` steps, starting after
    ``start``; labels are whatever ``adjacent`` returned. Neighbours are
    scanned in increasing index order, but the goal is always probed first so
    a direct edge is found without scanning the whole universe.
    """
    if start == goal:
        return []
    parent: dict[int, tuple[int, object]] = {start: (-1, None)}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        label = adjacent(u, goal)
        if label:
            parent[goal] = (u, label)
            break
        for v in range(n):
            if v in parent or v == goal:
                continue
            label = adjacent(u, v)
            if label:
                parent[v] = (u, label)
                queue.append(v)
    if goal not in parent:
        return None
    path = []
    node = goal
    while node != start:
        prev, label = parent[node]
        path.append((node, label))
        node = prev
    path.reverse()
    return path


def connected_components(n: int, adjacent: Callable[[int, int], bool],
                         threads: int = 1) -> list[list[int]]:
    """Components of an undirected graph on ``0..n-1``, each sorted, ordered by least member.

    Only pairs ``u < v`` are queried. With ``threads > 1`` the edge tests are
    evaluated concurrently; the union step is sequential, so the result does
    not depend on scheduling.
    """
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    if threads > 1:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(lambda p: bool(adjacent(*p)), pairs))
        for (u, v), flag in zip(pairs, flags):
            if flag:
                union(u, v)
    else:
        for u in range(n):
            for v in range(u + 1, n):
                # already joined: the edge cannot change the partition
                if find(u) == find(v):
                    continue
                if adjacent(u, v):
                    union(u, v)

    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values(), key=lambda g: g[0])


def check_universe(size: int, limits: SearchLimits) -> None:
    if size > limits.max_universe:
        raise UniverseTooLarge(
            f"search produced more than {limits.max_universe} morphisms",
            size=size, cap=limits.max_universe,
        )


def index_of(items: Sequence[T]) -> dict[T, int]:
    return {item: i for i, item in enumerate(items)}
