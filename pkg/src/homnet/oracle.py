"""Brute-force homology ranks over GF(2), independent of the persistence engine.

Everything here runs dense Gaussian elimination on integer bitsets and is
deliberately simple: it exists to cross-check the reduction pipeline on
small inputs, so it shares no code with it. A size guard keeps usage at
desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import Simplex, SimplicialComplex, enumerate_simplices
from .filtration import Filtration

__all__ = ["SIZE_GUARD", "RankReport", "betti_bruteforce", "persistent_betti_direct"]

SIZE_GUARD = 20000  # max total simplex count for dense elimination


@dataclass(frozen=True)
class RankReport:
    """Per-dimension ranks: f_k, rank of each boundary map, and the derived
    cycle, boundary-group, and homology ranks."""

    face_counts: tuple[int, ...]      # f_0 .. f_K
    boundary_ranks: tuple[int, ...]   # rank of del_0 .. del_{K+1}; del_0 is 0

    def cycle_rank(self, k: int) -> int:
        return self.face_counts[k] - self.boundary_ranks[k]

    def bounding_rank(self, k: int) -> int:
        return self.boundary_ranks[k + 1]

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(
            self.cycle_rank(k) - self.bounding_rank(k)
            for k in range(len(self.face_counts))
        )


def _reduce_columns(columns: list[int], track: bool = False):
    """Column reduction over GF(2); columns are int bitsets.

    Returns (rank, kernel) where kernel lists combination bitsets over
    column indices for the columns that reduced to zero (only if track).
    """
    cols = list(columns)
    combo = [1 << j for j in range(len(cols))] if track else None
    pivot_owner: dict[int, int] = {}
    kernel: list[int] = []
    for j in range(len(cols)):
        col = cols[j]
        while col:
            low = col.bit_length() - 1
            other = pivot_owner.get(low)
            if other is None:
                break
            col ^= cols[other]
            if track:
                combo[j] ^= combo[other]
        cols[j] = col
        if col:
            pivot_owner[col.bit_length() - 1] = j
        elif track:
            kernel.append(combo[j])
    return len(pivot_owner), kernel


def _rank(vectors: list[int]) -> int:
    rank, _ = _reduce_columns(vectors)
    return rank


def _group_by_dim(simplices: list[Simplex], top: int) -> list[list[Simplex]]:
    grouped: list[list[Simplex]] = [[] for _ in range(top + 1)]
    for s in simplices:
        if len(s) - 1 <= top:
            grouped[len(s) - 1].append(s)
    return grouped


def _boundary_columns(faces: list[Simplex], cells: list[Simplex]) -> list[int]:
    index = {s: i for i, s in enumerate(faces)}
    cols = []
    for s in cells:
        bits = 0
        if len(s) > 1:  # vertices map to zero under the boundary operator
            for face in itertools.combinations(s, len(s) - 1):
                bits |= 1 << index[face]
        cols.append(bits)
    return cols


def betti_bruteforce(k: SimplicialComplex, up_to: int) -> RankReport:
    """Exact GF(2) ranks of every boundary map up to dimension up_to + 1.

    The (up_to+1)-simplices are included so the top requested Betti number
    accounts for the boundaries that kill its cycles.
    """
    effective = k.dimension if k.max_dim_cap is None else min(k.dimension, k.max_dim_cap)
    top = min(up_to + 1, effective)
    simplices = enumerate_simplices(k, max(top, 0))
    if len(simplices) > SIZE_GUARD:
        raise ValueError(f"complex too large for brute force: {len(simplices)} > {SIZE_GUARD}")
    grouped = _group_by_dim(simplices, max(top, 0))
    return _rank_report(grouped, up_to)


def _rank_report(grouped: list[list[Simplex]], up_to: int) -> RankReport:
    face_counts = tuple(len(grouped[d]) if d < len(grouped) else 0 for d in range(up_to + 1))
    boundary_ranks = [0]  # del_0 is the zero map
    for d in range(1, up_to + 2):
        if d >= len(grouped) or not grouped[d]:
            boundary_ranks.append(0)
            continue
        boundary_ranks.append(_rank(_boundary_columns(grouped[d - 1], grouped[d])))
    return RankReport(face_counts=face_counts, boundary_ranks=tuple(boundary_ranks))


def persistent_betti_direct(f: Filtration, l: int, p: int, k: int) -> int:
    """Rank of the k-cycles at level l that are still unbounded at level l+p.

    Builds an explicit kernel basis of the level-l boundary map, the image
    of the level-(l+p) one, and intersects the two subspaces directly.
    """
    if l < 0 or p < 0 or l + p >= f.level_count:
        raise ValueError(f"(l={l}, p={p}) outside the filtration's level range")
    late = f.prefix_simplices(l + p)
    if len(late) > SIZE_GUARD:
        raise ValueError(f"prefix too large for brute force: {len(late)} > {SIZE_GUARD}")
    early = f.prefix_simplices(l)

    early_k = [s for s in early if len(s) - 1 == k]
    early_km1 = [s for s in early if len(s) - 1 == k - 1]
    late_k = [s for s in late if len(s) - 1 == k]
    late_kp1 = [s for s in late if len(s) - 1 == k + 1]

    # Kernel of del_k on the level-l prefix, as vectors over early_k indices.
    _, kernel = _reduce_columns(_boundary_columns(early_km1, early_k), track=True)

    # Embed kernel vectors into coordinates over late_k.
    late_index = {s: i for i, s in enumerate(late_k)}
    embed = [late_index[s] for s in early_k]
    z_vectors = []
    for vec in kernel:
        bits = 0
        j = 0
        while vec:
            if vec & 1:
                bits |= 1 << embed[j]
            vec >>= 1
            j += 1
        z_vectors.append(bits)

    b_vectors = _boundary_columns(late_k, late_kp1)
    rank_z = len(z_vectors)
    rank_b = _rank(b_vectors)
    rank_union = _rank(z_vectors + b_vectors)
    # dim(Z meet B) = rank_z + rank_b - rank_union
    return rank_union - rank_b
