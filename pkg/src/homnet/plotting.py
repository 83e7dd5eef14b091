"""Barcode figures rendered with matplotlib (PNG and friends)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .persistence import Barcode

__all__ = ["render_figure"]

_LANE_COLORS = plt.rcParams["axes.prop_cycle"].by_key()["color"]


def render_figure(b: Barcode, path: str | Path, cursor: int | None = None,
                  title: str | None = None) -> None:
    """Draw the barcode with one horizontal lane block per dimension.

    Essential intervals run to the right edge and end in an arrow marker;
    a dashed cursor line, when given, sits mid-level so the bars crossing
    it are the ones counted by the Betti numbers at that level.
    """
    drawable = [iv for iv in b.intervals if not iv.zero_length]
    span = max(b.level_count, 1)
    fig_height = max(2.5, 0.06 * len(drawable) + 0.5 * (b.max_dim() + 2))
    fig, ax = plt.subplots(figsize=(8, min(fig_height, 12)))

    y = 0
    tick_pos: list[float] = []
    tick_label: list[str] = []
    for dim in range(b.max_dim() + 1):
        group = [iv for iv in drawable if iv.dim == dim]
        if not group:
            continue
        color = _LANE_COLORS[dim % len(_LANE_COLORS)]
        start_y = y
        for iv in group:
            end = span if iv.death is None else iv.death
            ax.hlines(y, iv.birth, end, color=color, linewidth=1.6)
            if iv.death is None:
                ax.plot([span], [y], marker=">", color=color, markersize=4)
            y += 1
        tick_pos.append((start_y + y - 1) / 2)
        tick_label.append(f"H{dim}")
        y += 2
    if cursor is not None:
        ax.axvline(cursor + 0.5, color="#c03030", linestyle="--", linewidth=1)

    ax.set_yticks(tick_pos, tick_label)
    ax.set_xlim(-0.2, span + 0.5)
    ax.set_ylim(-1, max(y - 1, 1))
    ax.invert_yaxis()
    ax.set_xlabel("filtration level")
    if title:
        ax.set_title(title)
    if not drawable:
        ax.text(0.5, 0.5, "no intervals", transform=ax.transAxes, ha="center")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
