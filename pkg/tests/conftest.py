"""Shared fixtures and independent oracles.

The oracle functions here deliberately avoid the library: they operate on a
raw ``(n, edges)`` description with straightforward (slow) algorithms, so
library results can be checked against an implementation that shares no
code with them.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

import pytest

from fragility import Graph

# Populated by tests/test_acceptance.py; echoed after the run so the
# per-criterion verdict lines are visible in normal pytest output.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ----- independent oracles -------------------------------------------------

def oracle_centrality(n: int, edges: list[tuple[int, int]]) -> float:
    """Per-node summation form: sum_i (d_max - d_i) / ((N-1)(N-2))."""
    if n < 3:
        return 0.0
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    d_max = max(deg)
    return sum(d_max - d for d in deg) / ((n - 1) * (n - 2))


def oracle_fragile(n: int, edges: list[tuple[int, int]], removed) -> float:
    """Rebuild the surviving graph explicitly, then score it."""
    removed = set(removed)
    survivors = sorted(set(range(n)) - removed)
    remap = {old: new for new, old in enumerate(survivors)}
    kept = [(remap[u], remap[v]) for u, v in edges
            if u not in removed and v not in removed]
    return oracle_centrality(len(survivors), kept)


def oracle_betweenness(n: int, edges: list[tuple[int, int]]) -> list[float]:
    """Literal enumeration of every shortest path for every unordered pair.

    For each pair, all shortest paths are generated as explicit node
    sequences; each interior appearance contributes 1/num_paths.
    """
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def all_shortest_paths(s: int, t: int) -> list[list[int]]:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if t not in dist:
            return []
        paths = []

        def walk(node, acc):
            if node == s:
                paths.append([s] + acc[::-1])
                return
            for p in adj[node]:
                if p in dist and dist[p] == dist[node] - 1:
                    walk(p, acc + [node])

        walk(t, [])
        return paths

    bet = [0.0] * n
    for s, t in combinations(range(n), 2):
        paths = all_shortest_paths(s, t)
        if not paths:
            continue
        share = 1.0 / len(paths)
        for path in paths:
            for interior in path[1:-1]:
                bet[interior] += share
    return bet


def random_graph_edges(rng: random.Random, n: int,
                       density: float) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(n), 2)
            if rng.random() < density]


# ----- fixture graphs (expected values frozen from hand arithmetic) --------

@pytest.fixture
def star4() -> Graph:
    """K_{1,4}: hub 0, leaves 1..4.  Centralization exactly 1."""
    return Graph(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def double_star8() -> Graph:
    """Hubs 0,1 adjacent; 0-{2,3,4}; 1-{5,6,7}.  Centralization 18/42."""
    return Graph(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])


@pytest.fixture
def double_star10() -> Graph:
    """Hubs 0,1 adjacent; 0-{2..5}; 1-{6..9}.  Centralization 32/72."""
    return Graph(10, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                      (1, 6), (1, 7), (1, 8), (1, 9)])


@pytest.fixture
def k4_pendant() -> Graph:
    """K4 on 0..3 plus pendant 4 attached to 0.  Centralization 6/12."""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])


@pytest.fixture
def path4() -> Graph:
    """Path 0-1-2-3.  Centralization 1/3."""
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def triangle() -> Graph:
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def two_disjoint_edges() -> Graph:
    return Graph(4, [(0, 1), (2, 3)])
