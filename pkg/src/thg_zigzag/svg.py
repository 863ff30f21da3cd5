"""Barcode plots as plain SVG 1.1 (no plotting backend, so output is
byte-stable)."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .zigzag import Barcode, position_value

WIDTH = 640
LEFT = 60
RIGHT = 30
TOP = 20
BAR_GAP = 14
BAND_PAD = 18
AXIS_H = 40
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def _num(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def barcode_svg(b: Barcode, ticks: Optional[Sequence[float]] = None) -> str:
    """Render one horizontal band per dimension and one bar per pair.

    ``ticks`` are the x positions to label (snapshot positions or times);
    by default every even position on the index axis.
    """
    dims = b.dimensions or [0]
    coords = []
    for p in dims:
        for pair in b[p]:
            coords += [pair.birth, pair.death]
    if b.axis == "index":
        coords = [position_value(int(c)) for c in coords]
    if ticks is None:
        top = max(coords, default=1)
        ticks = list(range(int(top) + 1)) if b.axis == "index" else sorted(set(coords))
    ticks = list(ticks)
    lo = min(coords + ticks, default=0.0)
    hi = max(coords + ticks, default=1.0)
    if hi <= lo:
        hi = lo + 1.0

    def x(v: float) -> float:
        return LEFT + (v - lo) / (hi - lo) * (WIDTH - LEFT - RIGHT)

    parts = []
    y = TOP
    for p in dims:
        pairs = sorted(b[p], key=lambda q: (q.birth, q.death))
        band_h = BAND_PAD * 2 + BAR_GAP * max(len(pairs) - 1, 0)
        color = COLORS[p % len(COLORS)]
        parts.append(
            f'<text x="10" y="{_num(y + band_h / 2 + 4)}" font-size="12" font-family="sans-serif">D{p}</text>'
        )
        parts.append(
            f'<line x1="{LEFT}" y1="{_num(y + band_h)}" x2="{WIDTH - RIGHT}" y2="{_num(y + band_h)}" '
            'stroke="#cccccc" stroke-width="1"/>'
        )
        for i, pair in enumerate(pairs):
            birth, death = pair.birth, pair.death
            if b.axis == "index":
                birth, death = position_value(pair.birth_pos), position_value(pair.death_pos)
            by = y + BAND_PAD + i * BAR_GAP
            x1, x2 = x(birth), x(death)
            dash = ' stroke-dasharray="4,3"' if pair.open_end else ""
            parts.append(
                f'<line class="bar" x1="{_num(x1)}" y1="{_num(by)}" x2="{_num(x2)}" y2="{_num(by)}" '
                f'stroke="{color}" stroke-width="3"{dash}/>'
            )
            if pair.open_end:
                parts.append(
                    f'<polygon class="open-end" points="{_num(x2)},{_num(by - 5)} {_num(x2 + 8)},{_num(by)} '
                    f'{_num(x2)},{_num(by + 5)}" fill="{color}"/>'
                )
        y += band_h
    axis_y = y + 6
    parts.append(
        f'<line x1="{LEFT}" y1="{_num(axis_y)}" x2="{WIDTH - RIGHT}" y2="{_num(axis_y)}" stroke="black" stroke-width="1"/>'
    )
    for t in ticks:
        tx = x(t)
        parts.append(f'<line x1="{_num(tx)}" y1="{_num(axis_y)}" x2="{_num(tx)}" y2="{_num(axis_y + 5)}" stroke="black"/>')
        parts.append(
            f'<text x="{_num(tx)}" y="{_num(axis_y + 18)}" font-size="10" font-family="sans-serif" '
            f'text-anchor="middle">{escape(_num(t))}</text>'
        )
    label = "index" if b.axis == "index" else "time"
    height = axis_y + AXIS_H
    head = (
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{_num(height)}" '
        f'viewBox="0 0 {WIDTH} {_num(height)}">\n'
        f"<title>{escape(b.mode)} zigzag barcode ({label} axis)</title>\n"
    )
    return head + "\n".join(parts) + "\n</svg>\n"


def render_barcode(b: Barcode, out, ticks: Optional[Sequence[float]] = None) -> str:
    """Write the SVG for ``b`` to ``out`` and return it."""
    doc = barcode_svg(b, ticks)
    Path(out).write_text(doc, encoding="utf-8")
    return doc
