"""Ordered filtrations of a simplicial complex.

A filtration is a totally ordered simplex sequence with nondecreasing
integer levels such that every prefix is a subcomplex (faces appear before
cofaces). Two constructors are provided: the skeleton filtration, whose
level t adds all simplices of dimension t, and its simplex-wise refinement,
which adds one simplex per level in (dimension, lexicographic) order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import Simplex, SimplicialComplex, enumerate_simplices

__all__ = [
    "Filtration",
    "skeleton_filtration",
    "simplexwise_filtration",
    "validate",
    "save_filtration",
]


@dataclass(frozen=True)
class Filtration:
    simplices: tuple[Simplex, ...]
    levels: tuple[int, ...]
    level_count: int

    def __post_init__(self) -> None:
        if len(self.simplices) != len(self.levels):
            raise ValueError("simplices and levels must have equal length")
        if self.levels and (min(self.levels) < 0 or max(self.levels) >= self.level_count):
            raise ValueError("levels must lie in [0, level_count)")

    def __len__(self) -> int:
        return len(self.simplices)

    def dims(self) -> tuple[int, ...]:
        """Simplex dimension at each position."""
        return tuple(len(s) - 1 for s in self.simplices)

    def position_index(self) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.simplices)}

    def prefix_simplices(self, level: int) -> list[Simplex]:
        """Simplices present at the given level (the prefix subcomplex)."""
        return [s for s, l in zip(self.simplices, self.levels) if l <= level]


def skeleton_filtration(k: SimplicialComplex, up_to_dim: int | None = None) -> Filtration:
    """Filtration whose level t contributes exactly the dimension-t simplices."""
    limit = k.dimension if up_to_dim is None else up_to_dim
    simplices = tuple(enumerate_simplices(k, limit))
    levels = tuple(len(s) - 1 for s in simplices)
    level_count = (max(levels) + 1) if levels else 0
    return Filtration(simplices=simplices, levels=levels, level_count=level_count)


def simplexwise_filtration(k: SimplicialComplex, up_to_dim: int | None = None) -> Filtration:
    """One simplex per level, refining the skeleton filtration's order."""
    limit = k.dimension if up_to_dim is None else up_to_dim
    simplices = tuple(enumerate_simplices(k, limit))
    return Filtration(
        simplices=simplices,
        levels=tuple(range(len(simplices))),
        level_count=len(simplices),
    )


def validate(f: Filtration) -> str | None:
    """Check faces-before-cofaces and level monotonicity.

    Returns None when valid, otherwise a message naming the first offense.
    """
    for i in range(1, len(f.levels)):
        if f.levels[i] < f.levels[i - 1]:
            return (
                f"level decreases from {f.levels[i - 1]} to {f.levels[i]} at position {i}"
            )
    position: dict[Simplex, int] = {}
    for i, s in enumerate(f.simplices):
        if s in position:
            return f"duplicate simplex {s} at positions {position[s]} and {i}"
        if len(s) > 1:
            for face in itertools.combinations(s, len(s) - 1):
                j = position.get(face)
                if j is None:
                    return (
                        f"simplex {s} at position {i} precedes its face {face}"
                    )
        position[s] = i
    return None


def save_filtration(f: Filtration) -> str:
    """One line per simplex: ``level dim v0 v1 ...``, in filtration order."""
    lines = [f"#levels {f.level_count}"]
    for s, level in zip(f.simplices, f.levels):
        lines.append(f"{level} {len(s) - 1} " + " ".join(str(v) for v in s))
    return "\n".join(lines) + "\n"
