"""File formats: edge lists, no-strike lists, and run manifests.

Edge-list format, one record per line:

* ``u v`` or ``u,v``   -- an undirected edge between labels u and v
* ``u``                -- declares an isolated node
* ``# ...``            -- comment (also allowed after a record)

Labels are arbitrary non-empty strings without whitespace, commas or ``#``.
Node ids are assigned densely in first-appearance order.  Duplicate edges
collapse to one with a warning; self-loops are an error.  The no-strike
format is one label per line with the same comment rules.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import asdict, dataclass, field

from .graph import Graph

_SPLIT = re.compile(r"[,\s]+")
_LABEL_SAFE = re.compile(r"^[^,\s#]+$")


class EdgeListError(ValueError):
    """Malformed edge-list or no-strike input; carries the line number."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DuplicateEdgeWarning(UserWarning):
    pass


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Emits a single :class:`DuplicateEdgeWarning` naming how many duplicate
    edge records were collapsed, if any.
    """
    labels: list[str] = []
    index: dict[str, int] = {}

    def intern(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    edges: set[tuple[int, int]] = set()
    duplicates = 0
    for lineno, body in _records(text):
        parts = [p for p in _SPLIT.split(body) if p]
        if len(parts) == 1:
            intern(parts[0])
            continue
        if len(parts) != 2:
            raise EdgeListError(lineno, f"expected 1 or 2 labels, got {len(parts)}")
        u, v = parts
        if u == v:
            raise EdgeListError(lineno, f"self-loop on {u!r}")
        key = (intern(u), intern(v))
        if key[0] > key[1]:
            key = (key[1], key[0])
        if key in edges:
            duplicates += 1
        else:
            edges.add(key)
    if duplicates:
        warnings.warn(DuplicateEdgeWarning(
            f"collapsed {duplicates} duplicate edge record(s)"), stacklevel=2)
    return Graph(len(labels), sorted(edges), labels=tuple(labels))


def emit_edge_list(graph: Graph) -> str:
    """Serialize a graph so that parsing it back reproduces the same labeled
    edges (node ids may be renumbered in reading order)."""
    for lab in graph.labels:
        if not _LABEL_SAFE.match(lab):
            raise ValueError(
                f"label {lab!r} cannot be written to the edge-list format")
    lines = [f"{graph.labels[u]} {graph.labels[v]}" for u, v in graph.edges()]
    lines.extend(graph.labels[i] for i in range(graph.node_count)
                 if graph.degree[i] == 0)
    return "\n".join(lines) + ("\n" if lines else "")


def parse_no_strike(text: str, graph: Graph) -> frozenset[int]:
    """Parse a no-strike list against an already-loaded graph."""
    members: set[int] = set()
    for lineno, body in _records(text):
        parts = [p for p in _SPLIT.split(body) if p]
        if len(parts) != 1:
            raise EdgeListError(lineno, "expected exactly one label per line")
        label = parts[0]
        try:
            members.add(graph.id_of(label))
        except KeyError:
            raise EdgeListError(lineno, f"unknown node label {label!r}") from None
    return frozenset(members)


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record written next to produced outputs."""

    command: str
    parameters: dict
    graph_path: str | None = None
    no_strike_path: str | None = None
    seed: int | None = None
    outputs: tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> str:
        payload = asdict(self)
        payload["outputs"] = list(self.outputs)
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())
