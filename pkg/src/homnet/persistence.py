"""Boundary matrices over GF(2), column reduction, pairing, and barcodes.

The reduction pairs each annihilator simplex with the creator whose class it
kills; pairs translate to closed-open [birth, death) intervals in the
filtration's level coordinates, with essential classes open-ended. The raw
position coordinates are kept on each interval, so the position-based
persistence (death position - birth position - 1) stays available alongside
the level-based interval length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from .filtration import Filtration

__all__ = [
    "BoundaryMatrix",
    "PersistencePairing",
    "Interval",
    "Barcode",
    "boundary_matrix",
    "reduce",
    "intervals",
    "betti_at",
    "persistent_betti",
    "essential_counts",
]


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse GF(2) boundary matrix in filtration order.

    Column j holds the positions of the codimension-1 faces of simplex j;
    a k-simplex column has exactly k+1 entries, all smaller than j.
    """

    columns: tuple[frozenset[int], ...]
    dims: tuple[int, ...]


@dataclass(frozen=True)
class PersistencePairing:
    """Creator/annihilator position pairs plus unpaired (essential) creators."""

    pairs: tuple[tuple[int, int], ...]
    unpaired: frozenset[int]


def boundary_matrix(f: Filtration) -> BoundaryMatrix:
    index = f.position_index()
    columns: list[frozenset[int]] = []
    for s in f.simplices:
        if len(s) == 1:
            columns.append(frozenset())
            continue
        try:
            columns.append(frozenset(index[face] for face in itertools.combinations(s, len(s) - 1)))
        except KeyError as missing:
            raise ValueError(
                f"face {missing.args[0]} of simplex {s} is not in the filtration"
            ) from None
    return BoundaryMatrix(columns=tuple(columns), dims=f.dims())


def reduce(m: BoundaryMatrix, use_clearing: bool = True) -> PersistencePairing:
    """Standard left-to-right column reduction; pairing is order-independent.

    With ``use_clearing`` the columns are processed dimension by dimension
    from the top down, skipping columns already known to be creators; the
    resulting pairing is identical to the plain reduction's.
    """
    pairs = _reduce_clearing(m) if use_clearing else _reduce_plain(m)
    in_pair = {i for pair in pairs for i in pair}
    unpaired = frozenset(j for j in range(len(m.columns)) if j not in in_pair)
    return PersistencePairing(pairs=tuple(sorted(pairs)), unpaired=unpaired)


def _reduce_plain(m: BoundaryMatrix) -> list[tuple[int, int]]:
    cols = [set(c) for c in m.columns]
    pivot_owner: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    for j, col in enumerate(cols):
        while col:
            low = max(col)
            other = pivot_owner.get(low)
            if other is None:
                break
            col ^= cols[other]
        if col:
            low = max(col)
            pivot_owner[low] = j
            pairs.append((low, j))
    return pairs


def _reduce_clearing(m: BoundaryMatrix) -> list[tuple[int, int]]:
    by_dim: dict[int, list[int]] = {}
    for j, d in enumerate(m.dims):
        by_dim.setdefault(d, []).append(j)
    pairs: list[tuple[int, int]] = []
    cleared: set[int] = set()
    for d in sorted(by_dim, reverse=True):
        if d == 0:
            break  # vertex columns are empty
        reduced: dict[int, set[int]] = {}
        pivot_owner: dict[int, int] = {}
        for j in by_dim[d]:
            if j in cleared:
                continue
            col = set(m.columns[j])
            while col:
                low = max(col)
                other = pivot_owner.get(low)
                if other is None:
                    break
                col ^= reduced[other]
            if col:
                low = max(col)
                pivot_owner[low] = j
                reduced[j] = col
                pairs.append((low, j))
                cleared.add(low)
    return pairs


@dataclass(frozen=True)
class Interval:
    """A [birth, death) lifetime in level coordinates; death None = essential."""

    dim: int
    birth: int
    death: int | None
    birth_pos: int
    death_pos: int | None

    @property
    def zero_length(self) -> bool:
        return self.death is not None and self.death == self.birth

    @property
    def position_persistence(self) -> int | None:
        """Lifetime measured in simplex positions: death_pos - birth_pos - 1."""
        if self.death_pos is None:
            return None
        return self.death_pos - self.birth_pos - 1


@dataclass(frozen=True)
class Barcode:
    intervals: tuple[Interval, ...]
    level_count: int
    metadata: dict[str, Any] = field(default_factory=dict)

    def max_dim(self) -> int:
        """Largest homology dimension carrying any interval; -1 if none."""
        return max((iv.dim for iv in self.intervals), default=-1)


def _interval_sort_key(iv: Interval) -> tuple:
    death = iv.death if iv.death is not None else float("inf")
    return (iv.dim, iv.birth, death, iv.birth_pos)


def intervals(pr: PersistencePairing, f: Filtration,
              metadata: dict[str, Any] | None = None) -> Barcode:
    """Translate a pairing into per-dimension intervals in level coordinates.

    Zero-length intervals (birth == death, possible when a creator and its
    annihilator share a level) are retained and flagged; the [birth, death)
    convention keeps them out of every rank count automatically.
    """
    dims = f.dims()
    out = [
        Interval(dim=dims[i], birth=f.levels[i], death=f.levels[j],
                 birth_pos=i, death_pos=j)
        for i, j in pr.pairs
    ]
    out.extend(
        Interval(dim=dims[i], birth=f.levels[i], death=None, birth_pos=i, death_pos=None)
        for i in sorted(pr.unpaired)
    )
    return Barcode(
        intervals=tuple(sorted(out, key=_interval_sort_key)),
        level_count=f.level_count,
        metadata=dict(metadata or {}),
    )


def betti_at(b: Barcode, l: int) -> tuple[int, ...]:
    """Betti numbers at level l: per-dimension counts of intervals with
    birth <= l < death."""
    if not 0 <= l < b.level_count:
        raise ValueError(f"level {l} outside [0, {b.level_count})")
    counts = [0] * (b.max_dim() + 1)
    for iv in b.intervals:
        if iv.birth <= l and (iv.death is None or iv.death > l):
            counts[iv.dim] += 1
    return tuple(counts)


def persistent_betti(b: Barcode, l: int, p: int) -> tuple[int, ...]:
    """Ranks of the classes alive from level l through level l+p: counts of
    intervals with birth <= l and death > l+p (infinite deaths count)."""
    if l < 0 or p < 0 or l + p >= b.level_count:
        raise ValueError(f"(l={l}, p={p}) outside the filtration's level range")
    counts = [0] * (b.max_dim() + 1)
    for iv in b.intervals:
        if iv.birth <= l and (iv.death is None or iv.death > l + p):
            counts[iv.dim] += 1
    return tuple(counts)


def essential_counts(b: Barcode) -> tuple[int, ...]:
    """Per-dimension counts of intervals with infinite death."""
    counts = [0] * (b.max_dim() + 1)
    for iv in b.intervals:
        if iv.death is None:
            counts[iv.dim] += 1
    return tuple(counts)
