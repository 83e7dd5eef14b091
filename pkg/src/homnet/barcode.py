"""Barcode rendering (ASCII, SVG) and interval data import/export.

All output here is byte-deterministic for identical inputs: the SVG is
assembled from formatted strings, JSON is dumped with sorted keys, and no
timestamps or environment data are embedded. Zero-length intervals stay in
the data files but are never drawn.
"""

from __future__ import annotations

import json
from typing import Any

from .persistence import Barcode, Interval

__all__ = [
    "BarcodeSchemaError",
    "render_ascii",
    "render_svg",
    "export_json",
    "import_json",
    "export_csv",
]

JSON_SCHEMA = "homnet-intervals-v1"

SVG_AXIS_WIDTH = 600.0
SVG_MARGIN_LEFT = 50.0
SVG_MARGIN_TOP = 24.0
SVG_ROW_HEIGHT = 10.0
SVG_LANE_GAP = 22.0


class BarcodeSchemaError(ValueError):
    """Raised when imported interval data violates the JSON schema."""


def _drawable(b: Barcode) -> list[Interval]:
    return [iv for iv in b.intervals if not iv.zero_length]


def render_ascii(b: Barcode, width: int = 80) -> str:
    """Plain-text barcode: one row per interval, grouped by dimension.

    Finite intervals span [birth, death) with ``-`` marks; essential ones
    run to the axis end and finish with ``>``. Column l*cell_width is the
    left edge of level l, so counting marks down a level's column
    reproduces the Betti numbers there.
    """
    if width <= 0:
        raise ValueError("width must be positive")
    if b.level_count > 0 and width < b.level_count:
        raise ValueError(f"width {width} narrower than level count {b.level_count}")
    drawable = _drawable(b)
    header = f"barcode: {len(drawable)} intervals, {b.level_count} levels"
    if not drawable:
        return header + "\n"
    cell = width // max(b.level_count, 1)
    axis = b.level_count * cell
    lines = [header]
    for dim in range(b.max_dim() + 1):
        group = [iv for iv in drawable if iv.dim == dim]
        if not group:
            continue
        lines.append(f"H{dim}")
        for iv in group:
            start = iv.birth * cell
            if iv.death is None:
                row = " " * start + "-" * (axis - start) + ">"
                label = f"[{iv.birth}, inf)"
            else:
                row = " " * start + "-" * ((iv.death - iv.birth) * cell)
                label = f"[{iv.birth}, {iv.death})"
            lines.append(f"{row.ljust(axis + 1)} {label}")
    return "\n".join(lines) + "\n"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(b: Barcode, cursor: int | None = None) -> str:
    """SVG barcode with one lane per dimension and an optional dashed cursor.

    The cursor is drawn mid-level, at x = (cursor + 0.5) * unit, so the
    interval lines geometrically crossing it are exactly those counted by
    the Betti numbers at that level.
    """
    drawable = _drawable(b)
    unit = SVG_AXIS_WIDTH / max(b.level_count, 1)
    x0 = SVG_MARGIN_LEFT
    x_end = x0 + SVG_AXIS_WIDTH

    rows_per_dim: dict[int, list[Interval]] = {}
    for iv in drawable:
        rows_per_dim.setdefault(iv.dim, []).append(iv)

    parts: list[str] = []
    y = SVG_MARGIN_TOP
    body: list[str] = []
    for dim in sorted(rows_per_dim):
        group = rows_per_dim[dim]
        body.append(f'<g class="dim-{dim}">')
        body.append(
            f'<text x="{_fmt(x0 - 40)}" y="{_fmt(y + 4)}" font-size="11">H{dim}</text>'
        )
        for iv in group:
            x1 = x0 + iv.birth * unit
            if iv.death is None:
                x2 = x_end
                death_attr = "inf"
            else:
                x2 = x0 + iv.death * unit
                death_attr = str(iv.death)
            body.append(
                f'<line class="interval" data-dim="{iv.dim}" data-birth="{iv.birth}" '
                f'data-death="{death_attr}" x1="{_fmt(x1)}" y1="{_fmt(y)}" '
                f'x2="{_fmt(x2)}" y2="{_fmt(y)}" stroke="#1f5fa8" stroke-width="3"/>'
            )
            if iv.death is None:
                body.append(
                    f'<path class="arrow" d="M {_fmt(x_end)} {_fmt(y - 4)} '
                    f'L {_fmt(x_end + 8)} {_fmt(y)} L {_fmt(x_end)} {_fmt(y + 4)} Z" '
                    f'fill="#1f5fa8"/>'
                )
            y += SVG_ROW_HEIGHT
        body.append("</g>")
        y += SVG_LANE_GAP
    height = y + 30

    axis_y = height - 22
    axis = [f'<g class="axis">']
    axis.append(
        f'<line x1="{_fmt(x0)}" y1="{_fmt(axis_y)}" x2="{_fmt(x_end)}" y2="{_fmt(axis_y)}" '
        f'stroke="#333" stroke-width="1"/>'
    )
    for level in range(b.level_count + 1):
        x = x0 + level * unit
        axis.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(axis_y)}" x2="{_fmt(x)}" y2="{_fmt(axis_y + 4)}" '
            f'stroke="#333" stroke-width="1"/>'
        )
        if level < b.level_count:
            axis.append(
                f'<text x="{_fmt(x + unit / 2)}" y="{_fmt(axis_y + 14)}" font-size="9" '
                f'text-anchor="middle">{level}</text>'
            )
    axis.append("</g>")

    if cursor is not None:
        if not 0 <= cursor < max(b.level_count, 1):
            raise ValueError(f"cursor level {cursor} outside [0, {b.level_count})")
        cx = x0 + (cursor + 0.5) * unit
        body.append(
            f'<line class="cursor" data-level="{cursor}" x1="{_fmt(cx)}" y1="{_fmt(8)}" '
            f'x2="{_fmt(cx)}" y2="{_fmt(axis_y)}" stroke="#c03030" stroke-width="1" '
            f'stroke-dasharray="4 3"/>'
        )

    width = x_end + 40
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    if b.metadata:
        meta = json.dumps(b.metadata, sort_keys=True).replace("--", "- -")
        parts.append(f"<!-- {meta} -->")
    parts.extend(axis)
    parts.extend(body)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _interval_to_obj(iv: Interval) -> dict[str, Any]:
    return {
        "dim": iv.dim,
        "birth": iv.birth,
        "death": iv.death,
        "positions": [iv.birth_pos, iv.death_pos],
    }


def export_json(b: Barcode) -> str:
    obj = {
        "schema": JSON_SCHEMA,
        "level_count": b.level_count,
        "metadata": b.metadata,
        "intervals": [_interval_to_obj(iv) for iv in b.intervals],
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def import_json(text: str) -> Barcode:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise BarcodeSchemaError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict) or "intervals" not in obj:
        raise BarcodeSchemaError("missing 'intervals' array")
    if obj.get("schema", JSON_SCHEMA) != JSON_SCHEMA:
        raise BarcodeSchemaError(f"unsupported schema {obj.get('schema')!r}")
    level_count = obj.get("level_count", 0)
    if not isinstance(level_count, int) or level_count < 0:
        raise BarcodeSchemaError("level_count must be a nonnegative integer")
    intervals = []
    for i, item in enumerate(obj["intervals"]):
        if not isinstance(item, dict):
            raise BarcodeSchemaError(f"interval {i} is not an object")
        try:
            dim, birth = item["dim"], item["birth"]
            death = item.get("death")
            positions = item.get("positions", [None, None])
        except KeyError as k:
            raise BarcodeSchemaError(f"interval {i} missing key {k}") from None
        if not isinstance(dim, int) or not isinstance(birth, int):
            raise BarcodeSchemaError(f"interval {i}: dim and birth must be integers")
        if death is not None and (not isinstance(death, int) or death < birth):
            raise BarcodeSchemaError(f"interval {i}: bad death {death!r}")
        if not isinstance(positions, list) or len(positions) != 2:
            raise BarcodeSchemaError(f"interval {i}: positions must be a pair")
        intervals.append(
            Interval(dim=dim, birth=birth, death=death,
                     birth_pos=positions[0] if positions[0] is not None else -1,
                     death_pos=positions[1])
        )
    return Barcode(
        intervals=tuple(intervals),
        level_count=level_count,
        metadata=obj.get("metadata", {}),
    )


def export_csv(b: Barcode) -> str:
    """CSV export with an ``inf`` sentinel for open-ended deaths.

    Carries the barcode metadata as a ``#``-prefixed first line so the
    provenance survives format conversion.
    """
    lines = []
    if b.metadata:
        lines.append("# " + json.dumps(b.metadata, sort_keys=True))
    lines.append("dim,birth,death,birth_pos,death_pos")
    for iv in b.intervals:
        death = "inf" if iv.death is None else str(iv.death)
        death_pos = "inf" if iv.death_pos is None else str(iv.death_pos)
        lines.append(f"{iv.dim},{iv.birth},{death},{iv.birth_pos},{death_pos}")
    return "\n".join(lines) + "\n"
