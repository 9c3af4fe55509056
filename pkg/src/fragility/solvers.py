"""Removal-set solvers: greedy heuristic and exact enumeration.

Both solvers pick node sets whose deletion drives the surviving network's
degree centralization as high as possible, while never touching nodes in the
protected (no-strike) set and never exceeding the removal budget ``k``.
"""

from __future__ import annotations

from collections.abc import Collection, Iterator
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph, fragile

DEFAULT_WORK_LIMIT = 10_000_000


class WorkLimitExceeded(RuntimeError):
    """Raised when exhaustive enumeration would scan too many subsets."""


@dataclass(frozen=True)
class RemovalSolution:
    """Ordered removal set plus the fragility after each step.

    ``trace[0]`` is the fragility of the untouched graph; ``trace[j]`` the
    fragility after the first ``j`` removals, so ``len(trace) == len(removed)
    + 1`` and ``final_fragility == trace[-1]``.
    """

    removed: tuple[int, ...]
    trace: tuple[float, ...]
    final_fragility: float


def _coerce_no_strike(graph: Graph, no_strike: Collection[int] | None) -> frozenset[int]:
    if no_strike is None:
        return frozenset()
    ns = frozenset(no_strike)
    for i in ns:
        if not (0 <= i < graph.node_count):
            raise ValueError(f"no-strike set references unknown node id {i}")
    return ns


class DegreeTracker:
    """Degree bookkeeping for a graph under progressive node removal.

    Maintains surviving node/edge counts, per-node surviving degrees and a
    degree histogram, so pricing one more removal costs O(deg) instead of a
    full recount.  Values match :func:`fragility.graph.fragile` bit for bit
    because both evaluate the same integer counts with the same expression.
    """

    __slots__ = ("graph", "alive", "deg", "cnt", "n_alive", "m_alive", "max_deg")

    def __init__(self, graph: Graph) -> None:
        n = graph.node_count
        self.graph = graph
        self.alive = [True] * n
        self.deg = list(graph.degree)
        self.n_alive = n
        self.m_alive = graph.edge_count
        self.cnt = [0] * (n or 1)
        for d in self.deg:
            self.cnt[d] += 1
        self.max_deg = graph.max_degree

    def centrality(self) -> float:
        n = self.n_alive
        if n < 3:
            return 0.0
        return (n * self.max_deg - 2 * self.m_alive) / ((n - 1) * (n - 2))

    def removal_value(self, i: int) -> float:
        """Centralization after additionally removing alive node ``i``."""
        n2 = self.n_alive - 1
        if n2 < 3:
            return 0.0
        m2 = self.m_alive - self.deg[i]
        delta = {self.deg[i]: -1}
        for j in self.graph.adjacency[i]:
            if self.alive[j]:
                dj = self.deg[j]
                delta[dj] = delta.get(dj, 0) - 1
                delta[dj - 1] = delta.get(dj - 1, 0) + 1
        v = self.max_deg
        while v > 0 and self.cnt[v] + delta.get(v, 0) <= 0:
            v -= 1
        return (n2 * v - 2 * m2) / ((n2 - 1) * (n2 - 2))

    def remove(self, i: int) -> None:
        if not self.alive[i]:
            raise ValueError(f"node {i} is already removed")
        self.alive[i] = False
        self.n_alive -= 1
        self.m_alive -= self.deg[i]
        self.cnt[self.deg[i]] -= 1
        for j in self.graph.adjacency[i]:
            if self.alive[j]:
                dj = self.deg[j]
                self.cnt[dj] -= 1
                self.deg[j] = dj - 1
                self.cnt[dj - 1] += 1
        self.deg[i] = 0
        v = self.max_deg
        while v > 0 and self.cnt[v] == 0:
            v -= 1
        self.max_deg = v


def iter_greedy_steps(graph: Graph, no_strike: Collection[int] | None,
                      k: int) -> Iterator[tuple[int, float]]:
    """Yield ``(node, fragility_after)`` for each removal the greedy accepts.

    Each round prices every remaining targetable node and keeps the one with
    the largest non-negative fragility gain; zero-gain moves are accepted, so
    the budget is normally spent in full.  Candidates are scanned in
    ascending id order and an incumbent is displaced only by a strictly
    greater gain, so the lowest id among maximal scorers wins.  Stops early
    once every candidate's gain is negative.
    """
    if k < 0:
        raise ValueError("budget k must be non-negative")
    ns = _coerce_no_strike(graph, no_strike)
    tracker = DegreeTracker(graph)
    taken = 0
    while taken < k:
        base = tracker.centrality()
        best = -1
        best_gain = 0.0
        for i in range(graph.node_count):
            if not tracker.alive[i] or i in ns:
                continue
            gain = tracker.removal_value(i) - base
            if gain > best_gain or (best < 0 and gain >= best_gain):
                best = i
                best_gain = gain
        if best < 0:
            break
        tracker.remove(best)
        taken += 1
        yield best, tracker.centrality()


def greedy_fragile(graph: Graph, no_strike: Collection[int] | None = None,
                   k: int = 0) -> RemovalSolution:
    """Greedy removal-set search under budget ``k``.

    Runs in O(k * N^2) in the worst case; returns the chosen nodes in removal
    order with the fragility trace.  The final fragility is never below the
    untouched graph's whenever any node was removed.
    """
    base = fragile(graph, ())
    removed: list[int] = []
    trace: list[float] = [base]
    for node, value in iter_greedy_steps(graph, no_strike, k):
        removed.append(node)
        trace.append(value)
    return RemovalSolution(tuple(removed), tuple(trace), trace[-1])


def exact_opt(graph: Graph, no_strike: Collection[int] | None = None,
              k: int = 0, work_limit: int = DEFAULT_WORK_LIMIT) -> RemovalSolution:
    """Exhaustive optimum over all removal sets of size 0..k.

    Every subset size is scanned because fragility is not monotone: a smaller
    set can beat a larger one.  Ties on value prefer more removals, then the
    lexicographically smallest id tuple, which keeps results deterministic.
    Raises :class:`WorkLimitExceeded` when the subset count would exceed
    ``work_limit``.
    """
    if k < 0:
        raise ValueError("budget k must be non-negative")
    ns = _coerce_no_strike(graph, no_strike)
    pool = [i for i in range(graph.node_count) if i not in ns]
    k = min(k, len(pool))
    subsets = sum(comb(len(pool), j) for j in range(k + 1))
    if subsets > work_limit:
        raise WorkLimitExceeded(
            f"{subsets} candidate subsets exceed the work limit of {work_limit}")
    best: tuple[int, ...] = ()
    best_val = fragile(graph, ())
    for size in range(1, k + 1):
        for combo in combinations(pool, size):
            val = fragile(graph, combo)
            if val > best_val or (val == best_val and size > len(best)):
                best = combo
                best_val = val
    trace = [fragile(graph, best[:j]) for j in range(len(best) + 1)]
    return RemovalSolution(best, tuple(trace), trace[-1])


def fragility_decision(graph: Graph, no_strike: Collection[int] | None,
                       k: int, x: float,
                       work_limit: int = DEFAULT_WORK_LIMIT) -> bool:
    """True iff some removal set of size <= k pushes fragility strictly above x."""
    return exact_opt(graph, no_strike, k, work_limit).final_fragility > x
