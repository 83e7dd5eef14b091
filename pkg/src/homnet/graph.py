"""Simple graph representation and edge-list serialization.

Vertices are dense integers starting at 0. Undirected graphs store each
edge once in canonical (min, max) order; directed graphs keep (tail, head).
Graphs are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable

Edge = tuple[int, int]

__all__ = [
    "Edge",
    "Graph",
    "GraphFormatError",
    "load_edge_list",
    "save_edge_list",
    "degree_histogram",
    "compact_vertex_ids",
]


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph without self-loops or duplicate edges."""

    node_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    directed: bool = False

    def __post_init__(self) -> None:
        if self.node_count < 0:
            raise ValueError("node_count must be nonnegative")
        canonical = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u < 0 or v < 0:
                raise ValueError(f"negative vertex id in edge ({u}, {v})")
            if u >= self.node_count or v >= self.node_count:
                raise ValueError(
                    f"edge ({u}, {v}) references a vertex >= node_count {self.node_count}"
                )
            canonical.add((u, v) if self.directed else (min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canonical))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[set[int]]:
        """Adjacency sets; for directed graphs these are out-neighborhoods."""
        adj: list[set[int]] = [set() for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].add(v)
            if not self.directed:
                adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        if self.directed:
            return (u, v) in self.edges
        return (min(u, v), max(u, v)) in self.edges


def load_edge_list(source: str | IO[str], directed: bool | None = None) -> Graph:
    """Parse an edge list: one ``u v`` pair per line, ``#`` comments allowed.

    An optional ``#nodes N`` header declares the vertex count; the result
    has ``node_count = max(N, 1 + max vertex id)``. A ``#directed`` line
    marks the graph directed unless ``directed`` overrides it.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = source
    declared_nodes = 0
    file_directed = False
    edges: list[Edge] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tokens = line[1:].split()
            if tokens and tokens[0] == "nodes":
                if len(tokens) != 2:
                    raise GraphFormatError("malformed #nodes header", lineno)
                try:
                    declared_nodes = int(tokens[1])
                except ValueError:
                    raise GraphFormatError("malformed #nodes header", lineno) from None
            elif tokens and tokens[0] == "directed":
                file_directed = True
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two integer tokens, got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative vertex id in {line!r}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
        max_id = max(max_id, u, v)
    node_count = max(declared_nodes, max_id + 1)
    is_directed = file_directed if directed is None else directed
    return Graph(node_count=node_count, edges=frozenset(edges), directed=is_directed)


def save_edge_list(g: Graph, header_comments: Iterable[str] = ()) -> str:
    """Serialize a graph so that load(save(g)) == g, with byte-deterministic output."""
    lines = [f"# {comment}" for comment in header_comments]
    lines.append(f"#nodes {g.node_count}")
    if g.directed:
        lines.append("#directed")
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def degree_histogram(g: Graph) -> dict[int, int]:
    """Map degree -> vertex count. Directed graphs use total (in + out) degree."""
    degrees = [0] * g.node_count
    for u, v in g.edges:
        degrees[u] += 1
        degrees[v] += 1
    return dict(sorted(Counter(degrees).items()))


def compact_vertex_ids(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Remap the vertices that carry edges to dense ids 0..k-1.

    Returns the remapped graph and the old-id -> new-id mapping, for use as
    a sidecar when ingesting files with sparse vertex ids.
    """
    used = sorted({u for e in g.edges for u in e})
    mapping = {old: new for new, old in enumerate(used)}
    edges = frozenset((mapping[u], mapping[v]) for u, v in g.edges)
    return Graph(node_count=len(used), edges=edges, directed=g.directed), mapping
