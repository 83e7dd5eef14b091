"""Simplicial complexes built from graphs.

A simplex is a strictly increasing tuple of vertex ids; a complex is stored
by its inclusion-maximal simplices in canonical (size, lexicographic) order.
Faces are generated on demand, so closure under subsets is implicit.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph

Simplex = tuple[int, ...]

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "maximal_cliques",
    "clique_complex",
    "neighborhood_complex",
    "neighborhood_generators",
    "incidence_matrix",
    "incidence_csv",
    "skeleton",
    "enumerate_simplices",
    "one_skeleton_graph",
    "save_complex",
    "load_complex",
]


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by inclusion-maximal simplices.

    ``max_dim_cap`` records a truncation applied at build time; it bounds
    the dimension of every stored simplex and of all enumerated faces.
    """

    vertex_count: int
    maximal_simplices: tuple[Simplex, ...]
    max_dim_cap: int | None = None

    def __post_init__(self) -> None:
        seen = set()
        for s in self.maximal_simplices:
            if not s:
                raise ValueError("empty simplex")
            if any(b <= a for a, b in zip(s, s[1:])):
                raise ValueError(f"simplex {s} is not strictly increasing")
            if s[0] < 0 or s[-1] >= self.vertex_count:
                raise ValueError(f"simplex {s} out of vertex range")
            if s in seen:
                raise ValueError(f"duplicate maximal simplex {s}")
            seen.add(s)
            if self.max_dim_cap is not None and len(s) - 1 > self.max_dim_cap:
                raise ValueError(f"simplex {s} exceeds max_dim_cap {self.max_dim_cap}")
        object.__setattr__(
            self, "maximal_simplices", tuple(sorted(self.maximal_simplices, key=_simplex_key))
        )

    @property
    def dimension(self) -> int:
        """Largest simplex dimension present; -1 for the empty complex."""
        if not self.maximal_simplices:
            return -1
        return max(len(s) for s in self.maximal_simplices) - 1

    def face_counts(self, up_to_dim: int | None = None) -> tuple[int, ...]:
        """Number of simplices per dimension, f_0, f_1, ..."""
        limit = self.dimension if up_to_dim is None else up_to_dim
        counts = [0] * (max(limit, -1) + 1)
        for s in enumerate_simplices(self, limit):
            counts[len(s) - 1] += 1
        return tuple(counts)


def _simplex_key(s: Simplex) -> tuple[int, Simplex]:
    return (len(s), s)


def _degeneracy_order(adj: Sequence[set[int]]) -> list[int]:
    """Vertex order by repeatedly removing a minimum-degree vertex."""
    n = len(adj)
    degree = [len(a) for a in adj]
    buckets: list[set[int]] = [set() for _ in range(n)]
    for v, d in enumerate(degree):
        buckets[d].add(v)
    removed = [False] * n
    order = []
    d = 0
    for _ in range(n):
        while d < n and not buckets[d]:
            d += 1
        v = min(buckets[d])  # deterministic tie-break
        buckets[d].discard(v)
        removed[v] = True
        order.append(v)
        for w in adj[v]:
            if not removed[w]:
                buckets[degree[w]].discard(w)
                degree[w] -= 1
                buckets[degree[w]].add(w)
        d = max(d - 1, 0)
    return order


def _bron_kerbosch_pivot(adj: Sequence[set[int]], R: list[int], P: set[int], X: set[int],
                         out: list[Simplex]) -> None:
    if not P and not X:
        out.append(tuple(sorted(R)))
        return
    pivot = max(P | X, key=lambda u: (len(P & adj[u]), -u))
    for v in sorted(P - adj[pivot]):
        _bron_kerbosch_pivot(adj, R + [v], P & adj[v], X & adj[v], out)
        P.remove(v)
        X.add(v)


def maximal_cliques(g: Graph, workers: int = 1) -> list[Simplex]:
    """All maximal cliques via Bron-Kerbosch with pivoting over a degeneracy order.

    Branches for distinct seed vertices are independent, so they may be
    dispatched to a thread pool; results are merged into canonical order
    regardless of worker count.
    """
    if g.directed:
        raise ValueError("clique enumeration requires an undirected graph")
    adj = g.neighbors()
    order = _degeneracy_order(adj)
    rank = {v: i for i, v in enumerate(order)}

    def branch(v: int) -> list[Simplex]:
        found: list[Simplex] = []
        later = {w for w in adj[v] if rank[w] > rank[v]}
        earlier = {w for w in adj[v] if rank[w] < rank[v]}
        _bron_kerbosch_pivot(adj, [v], later, earlier, found)
        return found

    cliques: list[Simplex] = []
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(branch, order):
                cliques.extend(part)
    else:
        for v in order:
            cliques.extend(branch(v))
    return sorted(cliques, key=_simplex_key)


def _truncate_maximal(maximal: Iterable[Simplex], max_dim: int) -> list[Simplex]:
    # Inputs are inclusion-maximal, so equal-size pieces cannot nest and a
    # small maximal simplex cannot sit inside a subset of a larger one;
    # deduplication is all that is needed.
    size = max_dim + 1
    out: set[Simplex] = set()
    for s in maximal:
        if len(s) <= size:
            out.add(s)
        else:
            out.update(itertools.combinations(s, size))
    return sorted(out, key=_simplex_key)


def clique_complex(g: Graph, max_dim: int | None = None, workers: int = 1) -> SimplicialComplex:
    """The flag complex of an undirected graph: simplices are cliques.

    With ``max_dim`` set, simplices are truncated to that dimension; for a
    k-th homology computation the cap must be at least k+1.
    """
    cliques = maximal_cliques(g, workers=workers)
    if max_dim is not None:
        if max_dim < 0:
            raise ValueError("max_dim must be nonnegative")
        cliques = _truncate_maximal(cliques, max_dim)
    return SimplicialComplex(
        vertex_count=g.node_count, maximal_simplices=tuple(cliques), max_dim_cap=max_dim
    )


def neighborhood_generators(g: Graph, closed: bool = True) -> list[Simplex]:
    """One generating simplex per vertex: its closed or open (out-)neighborhood."""
    adj = g.neighbors()
    if closed:
        return [tuple(sorted(adj[v] | {v})) for v in range(g.node_count)]
    return [tuple(sorted(adj[v])) for v in range(g.node_count) if adj[v]]


def neighborhood_complex(g: Graph, closed: bool = True) -> SimplicialComplex:
    """Complex generated by vertex (out-)neighborhoods.

    With ``closed`` (the default) each vertex contributes itself plus its
    neighbors, so the incidence structure matches the adjacency matrix with
    the diagonal raised by one. ``closed=False`` drops the vertex itself
    (common-neighbor simplices only). Only inclusion-maximal neighborhoods
    are stored.
    """
    generators = neighborhood_generators(g, closed=closed)
    unique = sorted(set(generators), key=lambda s: (-len(s), s))
    by_vertex: dict[int, list[frozenset[int]]] = {}
    kept: list[Simplex] = []
    for s in unique:
        fs = frozenset(s)
        # Larger sets are processed first, so any strict superset of s that
        # survived is already indexed under each of s's vertices.
        if any(fs < other for other in by_vertex.get(s[0], ())):
            continue
        kept.append(s)
        for v in s:
            by_vertex.setdefault(v, []).append(fs)
    return SimplicialComplex(vertex_count=g.node_count, maximal_simplices=tuple(kept))


def incidence_matrix(k: SimplicialComplex) -> np.ndarray:
    """0/1 matrix with one row per maximal simplex, one column per vertex."""
    m = np.zeros((len(k.maximal_simplices), k.vertex_count), dtype=np.uint8)
    for i, s in enumerate(k.maximal_simplices):
        m[i, list(s)] = 1
    return m


def incidence_csv(k: SimplicialComplex) -> str:
    """CSV export of the incidence matrix, header row = vertex ids."""
    header = ",".join(str(v) for v in range(k.vertex_count))
    rows = [",".join(str(x) for x in row) for row in incidence_matrix(k)]
    return "\n".join([header] + rows) + "\n"


def skeleton(k: SimplicialComplex, j: int) -> SimplicialComplex:
    """All simplices of dimension <= j, as a complex in its own right."""
    if j < 0:
        raise ValueError("skeleton dimension must be nonnegative")
    if j >= k.dimension:
        return k
    return SimplicialComplex(
        vertex_count=k.vertex_count,
        maximal_simplices=tuple(_truncate_maximal(k.maximal_simplices, j)),
        max_dim_cap=j,
    )


def enumerate_simplices(k: SimplicialComplex, up_to_dim: int) -> list[Simplex]:
    """Every face of dimension <= up_to_dim, deduplicated, in (dim, lex) order."""
    if k.max_dim_cap is not None and up_to_dim > k.max_dim_cap:
        raise ValueError(
            f"requested dimension {up_to_dim} exceeds max_dim_cap {k.max_dim_cap}"
        )
    faces: set[Simplex] = set()
    for s in k.maximal_simplices:
        top = min(len(s), up_to_dim + 1)
        for size in range(1, top + 1):
            faces.update(itertools.combinations(s, size))
    return sorted(faces, key=_simplex_key)


def one_skeleton_graph(k: SimplicialComplex) -> Graph:
    """The graph formed by the complex's vertices and edges."""
    edges = frozenset(e for e in enumerate_simplices(k, 1) if len(e) == 2)
    return Graph(node_count=k.vertex_count, edges=edges, directed=False)


def save_complex(k: SimplicialComplex, header_comments: Iterable[str] = ()) -> str:
    """Serialize: ``#vertices N`` header, one maximal simplex per line."""
    lines = [f"# {comment}" for comment in header_comments]
    lines.append(f"#vertices {k.vertex_count}")
    if k.max_dim_cap is not None:
        lines.append(f"#max_dim {k.max_dim_cap}")
    for s in k.maximal_simplices:
        lines.append(" ".join(str(v) for v in s))
    return "\n".join(lines) + "\n"


def load_complex(text: str) -> SimplicialComplex:
    vertex_count = 0
    max_dim: int | None = None
    simplices: list[Simplex] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tokens = line[1:].split()
            if tokens and tokens[0] == "vertices":
                vertex_count = int(tokens[1])
            elif tokens and tokens[0] == "max_dim":
                max_dim = int(tokens[1])
            continue
        try:
            s = tuple(sorted(int(t) for t in line.split()))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex id") from None
        simplices.append(s)
        if s:
            vertex_count = max(vertex_count, s[-1] + 1)
    return SimplicialComplex(
        vertex_count=vertex_count, maximal_simplices=tuple(simplices), max_dim_cap=max_dim
    )
