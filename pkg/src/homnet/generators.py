"""Seeded random network generators: uniform, exponential-degree, scale-free modular.

All generators draw from numpy's PCG64 stream (``np.random.default_rng(seed)``)
and consume it in a documented order, so identical parameters and seed give
byte-identical edge lists across runs and releases. No generator emits
self-loops or duplicate edges.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

__all__ = [
    "GeneratorParams",
    "generate",
    "gen_er",
    "gen_exponential",
    "gen_sf_modular",
    "gen_sf_modular_with_modules",
]


@dataclass(frozen=True)
class GeneratorParams:
    """Validated parameter record for one generator family."""

    variant: str  # "er", "exp", or "sfm"
    n: int
    seed: int
    p: float | None = None
    k_star: float | None = None
    m: int | None = None
    p0: float | None = None
    alpha: float | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.variant == "er":
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ValueError("er requires link probability p in [0, 1]")
        elif self.variant == "exp":
            if self.k_star is None or self.k_star <= 0:
                raise ValueError("exp requires degree scale k_star > 0")
            if self.n < 4:
                raise ValueError("exp requires n >= 4")
        elif self.variant == "sfm":
            if self.m is None or self.m < 1:
                raise ValueError("sfm requires links-per-node m >= 1")
            if self.p0 is None or not 0.0 <= self.p0 <= 1.0:
                raise ValueError("sfm requires new-module probability p0 in [0, 1]")
            if self.alpha is None or not 0.0 < self.alpha <= 1.0:
                raise ValueError("sfm requires attractiveness alpha in (0, 1]")
            if self.n <= self.m + 1:
                raise ValueError("sfm requires n > m + 1")
        else:
            raise ValueError(f"unknown generator variant {self.variant!r}")

    def to_metadata(self) -> dict:
        fields = {"variant": self.variant, "n": self.n, "seed": self.seed}
        for name in ("p", "k_star", "m", "p0", "alpha"):
            value = getattr(self, name)
            if value is not None:
                fields[name] = value
        return fields


def generate(params: GeneratorParams) -> Graph:
    if params.variant == "er":
        return gen_er(params.n, params.p, params.seed)
    if params.variant == "exp":
        return gen_exponential(params.n, params.k_star, params.seed)
    return gen_sf_modular(params.n, params.m, params.p0, params.alpha, params.seed)


def gen_er(n: int, p: float, seed: int) -> Graph:
    """Uniform random graph: each of the C(n,2) pairs is linked with probability p.

    Stream order: for each u = 0..n-2, one block of n-1-u uniforms for the
    pairs (u, u+1), ..., (u, n-1).
    """
    GeneratorParams(variant="er", n=n, seed=seed, p=p)
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]] = []
    for u in range(n - 1):
        draws = rng.random(n - 1 - u)
        for v in np.nonzero(draws < p)[0]:
            edges.append((u, u + 1 + int(v)))
    return Graph(node_count=n, edges=frozenset(edges), directed=False)


def _truncated_exponential_probs(k_star: float, k_max: int) -> tuple[np.ndarray, np.ndarray]:
    ks = np.arange(2, k_max + 1)
    weights = np.exp(-ks / k_star)
    return ks, weights / weights.sum()


def gen_exponential(n: int, k_star: float, seed: int) -> Graph:
    """Configuration-model graph with degrees from a truncated exponential law.

    Target degrees are drawn from P(k) proportional to exp(-k / k_star) on
    k in [2, n-1] (tail mass renormalized onto that range). An odd degree
    sum is fixed by incrementing the first node with spare capacity. Stubs
    are shuffled and paired; self-loops and duplicate edges are repaired by
    seeded pair swaps, bounded at 200 sweeps.

    Stream order: one degree-sequence draw, one stub shuffle, then one
    uniform partner index per attempted repair swap.
    """
    GeneratorParams(variant="exp", n=n, seed=seed, k_star=k_star)
    rng = np.random.default_rng(seed)
    k_max = n - 1
    ks, probs = _truncated_exponential_probs(k_star, k_max)
    degrees = rng.choice(ks, size=n, p=probs)
    if degrees.sum() % 2 == 1:
        for i in range(n):
            if degrees[i] < k_max:
                degrees[i] += 1
                break
    stubs = np.repeat(np.arange(n), degrees)
    rng.shuffle(stubs)
    pairs = [[int(a), int(b)] for a, b in stubs.reshape(-1, 2)]
    edges = _repair_pairs(pairs, rng)
    return Graph(node_count=n, edges=frozenset(edges), directed=False)


def _repair_pairs(pairs: list[list[int]], rng: np.random.Generator,
                  max_sweeps: int = 200) -> list[tuple[int, int]]:
    """Remove self-pairs and duplicates by swapping endpoints between pairs."""

    def canon(pair: list[int]) -> tuple[int, int]:
        a, b = pair
        return (a, b) if a <= b else (b, a)

    counts: dict[tuple[int, int], int] = {}
    for pair in pairs:
        key = canon(pair)
        counts[key] = counts.get(key, 0) + 1

    def is_bad(pair: list[int]) -> bool:
        return pair[0] == pair[1] or counts[canon(pair)] > 1

    for _ in range(max_sweeps):
        bad = [i for i, pair in enumerate(pairs) if is_bad(pair)]
        if not bad:
            return [canon(pair) for pair in pairs]
        for i in bad:
            if not is_bad(pairs[i]):
                continue
            j = int(rng.integers(len(pairs)))
            if j == i:
                continue
            pi, pj = pairs[i], pairs[j]
            proposed_i = [pi[0], pj[1]]
            proposed_j = [pj[0], pi[1]]
            if proposed_i[0] == proposed_i[1] or proposed_j[0] == proposed_j[1]:
                continue
            counts[canon(pi)] -= 1
            counts[canon(pj)] -= 1
            ok = (
                counts.get(canon(proposed_i), 0) == 0
                and counts.get(canon(proposed_j), 0) == 0
                and canon(proposed_i) != canon(proposed_j)
            )
            if ok:
                pairs[i], pairs[j] = proposed_i, proposed_j
                counts[canon(proposed_i)] = counts.get(canon(proposed_i), 0) + 1
                counts[canon(proposed_j)] = counts.get(canon(proposed_j), 0) + 1
            else:
                counts[canon(pi)] += 1
                counts[canon(pj)] += 1
    raise RuntimeError(
        "stub-matching repair did not converge; degree sequence may be infeasible"
    )


def _preferential_pick(rng: np.random.Generator, candidates: list[int],
                       degrees: list[int]) -> int:
    """One draw, weighted by degree + 1. Candidates must be nonempty and sorted."""
    weights = np.array([degrees[v] + 1 for v in candidates], dtype=np.float64)
    cum = np.cumsum(weights)
    r = rng.random() * cum[-1]
    idx = int(np.searchsorted(cum, r, side="right"))
    return candidates[min(idx, len(candidates) - 1)]


def gen_sf_modular(n: int, m: int, p0: float, alpha: float, seed: int) -> Graph:
    graph, _ = gen_sf_modular_with_modules(n, m, p0, alpha, seed)
    return graph


def gen_sf_modular_with_modules(n: int, m: int, p0: float, alpha: float,
                                seed: int) -> tuple[Graph, tuple[int, ...]]:
    """Grown scale-free graph with modules and tunable triangle formation.

    Rules, applied per arriving node j after a seed clique on nodes 0..m
    (module 0):

    * with probability p0, j founds a new module and attaches one bridge
      link to a node chosen preferentially (weight degree+1) over the whole
      graph;
    * otherwise j joins an existing module chosen with probability
      proportional to its size and attaches m links: the first to a module
      member chosen preferentially, each later one with probability
      1 - alpha to a uniform non-adjacent neighbor of the previous target
      (triad formation), else preferentially within the module. When the
      module runs out of non-adjacent members the choice widens to the
      whole graph; if nothing is left the node stops early.

    Stream order per node: one uniform for the module decision, then one
    draw per attached link (triad steps use two: the branch uniform and
    the neighbor index).

    Returns the graph and the module id of every node.
    """
    GeneratorParams(variant="sfm", n=n, seed=seed, m=m, p0=p0, alpha=alpha)
    rng = np.random.default_rng(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    degrees = [0] * n
    edges: list[tuple[int, int]] = []

    def add_edge(a: int, b: int) -> None:
        adj[a].add(b)
        adj[b].add(a)
        degrees[a] += 1
        degrees[b] += 1
        edges.append((min(a, b), max(a, b)))

    for a in range(m + 1):
        for b in range(a + 1, m + 1):
            add_edge(a, b)
    module_of = [0] * n
    module_members: list[list[int]] = [list(range(m + 1))]

    for j in range(m + 1, n):
        if rng.random() < p0:
            module_of[j] = len(module_members)
            module_members.append([j])
            bridge = _preferential_pick(rng, list(range(j)), degrees)
            add_edge(j, bridge)
            continue

        sizes = np.array([len(members) for members in module_members], dtype=np.float64)
        cum = np.cumsum(sizes)
        pick = rng.random() * cum[-1]
        module = int(np.searchsorted(cum, pick, side="right"))
        module = min(module, len(module_members) - 1)
        module_of[j] = module
        members = module_members[module]

        def open_candidates(pool) -> list[int]:
            return sorted(v for v in pool if v != j and v not in adj[j])

        previous: int | None = None
        for link in range(m):
            target: int | None = None
            if link > 0 and previous is not None and rng.random() < 1.0 - alpha:
                nearby = open_candidates(adj[previous])
                if nearby:
                    target = nearby[int(rng.integers(len(nearby)))]
            if target is None:
                local = open_candidates(members)
                if local:
                    target = _preferential_pick(rng, local, degrees)
                else:
                    anywhere = open_candidates(list(range(j)))
                    if not anywhere:
                        break
                    target = _preferential_pick(rng, anywhere, degrees)
            add_edge(j, target)
            previous = target
        members.append(j)

    graph = Graph(node_count=n, edges=frozenset(edges), directed=False)
    return graph, tuple(module_of)
