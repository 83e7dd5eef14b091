"""Shared fixtures and small independent oracles for the test suite."""

from __future__ import annotations

import itertools

from homnet.complexes import SimplicialComplex
from homnet.graph import Graph

# Branched 12-vertex sample complex: one 4-simplex, two 3-simplices, two
# 2-simplices and a bridging edge, glued into a connected chain.
BRANCHED_MAXIMAL = (
    (0, 1, 2, 3),
    (2, 3, 4),
    (4, 7),
    (2, 5, 6),
    (6, 7, 8, 9, 10),
    (8, 9, 10, 11),
)


def branched_complex() -> SimplicialComplex:
    return SimplicialComplex(vertex_count=12, maximal_simplices=BRANCHED_MAXIMAL)


def path_graph(n: int) -> Graph:
    return Graph(node_count=n, edges=frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    edges = {(i, (i + 1) % n) for i in range(n)}
    return Graph(node_count=n, edges=frozenset(edges))


def complete_graph(n: int) -> Graph:
    return Graph(node_count=n, edges=frozenset(itertools.combinations(range(n), 2)))


def octahedron_graph() -> Graph:
    """K_{2,2,2}: all pairs among 6 vertices except the three antipodal ones."""
    anti = {(0, 1), (2, 3), (4, 5)}
    edges = {e for e in itertools.combinations(range(6), 2) if e not in anti}
    return Graph(node_count=6, edges=frozenset(edges))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Plain stdlib-seeded random graph, independent of the generators module."""
    import random

    rng = random.Random(seed)
    edges = {e for e in itertools.combinations(range(n), 2) if rng.random() < p}
    return Graph(node_count=n, edges=frozenset(edges))


def pad(values, length):
    """Right-pad a Betti tuple with zeros for comparisons across engines."""
    return tuple(values) + (0,) * (length - len(values))


def naive_cliques_of_size(g: Graph, size: int) -> set[tuple[int, ...]]:
    """Brute-force clique counter used as an enumeration oracle."""
    adj = g.neighbors()
    found = set()
    for combo in itertools.combinations(range(g.node_count), size):
        if all(b in adj[a] for a, b in itertools.combinations(combo, 2)):
            found.add(combo)
    return found


def naive_triangles(g: Graph) -> set[tuple[int, int, int]]:
    """Edge-based triangle enumeration, feasible for sparse graphs."""
    adj = g.neighbors()
    out = set()
    for u, v in g.edges:
        for w in adj[u] & adj[v]:
            out.add(tuple(sorted((u, v, w))))
    return out


def naive_k4s(g: Graph) -> set[tuple[int, int, int, int]]:
    adj = g.neighbors()
    out = set()
    for t in naive_triangles(g):
        common = adj[t[0]] & adj[t[1]] & adj[t[2]]
        for w in common:
            out.add(tuple(sorted((*t, w))))
    return out


def closure_violation(simplices) -> bool:
    """Brute-force check: does any prefix fail to contain all faces?"""
    seen = set()
    for s in simplices:
        for size in range(1, len(s)):
            for face in itertools.combinations(s, size):
                if face not in seen:
                    return True
        seen.add(s)
    return False
