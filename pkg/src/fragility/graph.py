"""Undirected simple graphs and network-wide degree centralization.

The centralization score of a graph compares every node's degree against the
most connected node and normalizes so that a star scores 1.0 and any
degree-regular graph (cycle, complete graph, ...) scores 0.0.  Graphs with
fewer than three nodes score 0.0 by convention, since the normalizing factor
vanishes there.
"""

from __future__ import annotations

from collections.abc import Collection, Iterable


class Graph:
    """Immutable undirected simple graph over dense integer node ids.

    Nodes are ``0 .. node_count - 1``.  Each node carries an external string
    label (defaulting to its id).  Self-loops and parallel edges are rejected
    at construction.
    """

    __slots__ = ("node_count", "edge_count", "adjacency", "degree", "labels",
                 "max_degree", "_edges", "_label_index")

    def __init__(self, node_count: int,
                 edges: Iterable[tuple[int, int]],
                 labels: Iterable[str] | None = None) -> None:
        if node_count < 0:
            raise ValueError("node_count must be non-negative")
        self.node_count = node_count
        if labels is None:
            label_tuple = tuple(str(i) for i in range(node_count))
        else:
            label_tuple = tuple(labels)
            if len(label_tuple) != node_count:
                raise ValueError("need exactly one label per node")
            if any(not lab for lab in label_tuple):
                raise ValueError("labels must be non-empty strings")
        self.labels = label_tuple
        self._label_index = {lab: i for i, lab in enumerate(label_tuple)}
        if len(self._label_index) != node_count:
            raise ValueError("labels must be unique")

        adjacency: list[set[int]] = [set() for _ in range(node_count)]
        canonical: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"edge ({u}, {v}) references an unknown node id")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            canonical.append(key)
            adjacency[u].add(v)
            adjacency[v].add(u)
        canonical.sort()
        self._edges = tuple(canonical)
        self.adjacency = tuple(frozenset(a) for a in adjacency)
        self.degree = tuple(len(a) for a in adjacency)
        self.edge_count = len(canonical)
        self.max_degree = max(self.degree, default=0)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return self._edges

    def neighbors(self, i: int) -> frozenset[int]:
        return self.adjacency[i]

    def id_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"unknown node label {label!r}") from None

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.node_count}, m={self.edge_count})"


def _check_node_ids(graph: Graph, nodes: Collection[int]) -> None:
    for i in nodes:
        if not (0 <= i < graph.node_count):
            raise ValueError(f"unknown node id {i}")


def network_degree_centrality(graph: Graph) -> float:
    """Degree centralization of the whole network, in [0, 1].

    Computed as (N * d_max - 2 * M) / ((N - 1) * (N - 2)).  Returns 0.0 for
    graphs with fewer than three nodes.
    """
    n = graph.node_count
    if n < 3:
        return 0.0
    return (n * graph.max_degree - 2 * graph.edge_count) / ((n - 1) * (n - 2))


def fragile(graph: Graph, removed: Collection[int]) -> float:
    """Centralization of the subgraph left after deleting ``removed``.

    ``removed`` must be a set of valid node ids; surviving nodes keep only
    edges whose other endpoint also survives.  Scores the degenerate 0.0
    when fewer than three nodes survive.
    """
    removed = frozenset(removed)
    _check_node_ids(graph, removed)
    survivors = graph.node_count - len(removed)
    if survivors < 3:
        return 0.0
    lost: dict[int, int] = {}
    for r in removed:
        for j in graph.adjacency[r]:
            if j not in removed:
                lost[j] = lost.get(j, 0) + 1
    degree_sum = 0
    top = 0
    for i in range(graph.node_count):
        if i in removed:
            continue
        d = graph.degree[i] - lost.get(i, 0)
        degree_sum += d
        if d > top:
            top = d
    return (survivors * top - degree_sum) / ((survivors - 1) * (survivors - 2))


def marginal_gain(graph: Graph, base: Collection[int], candidate: int) -> float:
    """Change in fragility from additionally removing ``candidate``.

    Equals ``fragile(graph, base | {candidate}) - fragile(graph, base)``.
    The candidate must not already be in the base set.
    """
    base = frozenset(base)
    _check_node_ids(graph, base)
    _check_node_ids(graph, (candidate,))
    if candidate in base:
        raise ValueError(f"candidate {candidate} is already removed")
    return fragile(graph, base | {candidate}) - fragile(graph, base)


def induced_subgraph(graph: Graph, keep: Collection[int]) -> Graph:
    """Subgraph on ``keep``, reindexed densely with labels preserved."""
    keep_set = frozenset(keep)
    _check_node_ids(graph, keep_set)
    order = sorted(keep_set)
    remap = {old: new for new, old in enumerate(order)}
    edges = [(remap[u], remap[v]) for u, v in graph.edges()
             if u in keep_set and v in keep_set]
    return Graph(len(order), edges, labels=[graph.labels[i] for i in order])


def star_graph(leaves: int) -> Graph:
    """Star with one hub (id 0) and ``leaves`` pendant nodes."""
    if leaves < 0:
        raise ValueError("leaves must be non-negative")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 nodes")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])
