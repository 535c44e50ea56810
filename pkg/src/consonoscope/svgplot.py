"""Minimal deterministic SVG rendering: a single-series line plot and a
two-column bipartite relation panel.

Output is plain static markup with fixed decimal formatting, so identical
data always serializes to identical bytes. Anything fancier belongs in a
downstream tool fed by the CSV and DOT exports.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

_WIDTH = 640.0
_HEIGHT = 360.0
_MARGIN_LEFT = 60.0
_MARGIN_RIGHT = 15.0
_MARGIN_TOP = 30.0
_MARGIN_BOTTOM = 45.0
_TICKS = 5


def _coord(value: float) -> str:
    return "%.3f" % (value + 0.0)


def _tick_label(value: float) -> str:
    return "%.4g" % (value + 0.0)


def _span(values: Sequence[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if lo == hi:
        # degenerate range: pad so the flat line sits mid-plot
        return lo - 1.0, hi + 1.0
    return lo, hi


def line_plot(
    xs: Sequence[float],
    ys: Sequence[float],
    title: str,
    x_label: str,
    y_label: str,
) -> str:
    """Polyline plot of one series with labeled, linearly ticked axes."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys must have equal lengths")
    if len(xs) < 2:
        raise ValueError("a line plot needs at least two points")
    x_lo, x_hi = _span(xs)
    y_lo, y_hi = _span(ys)
    plot_w = _WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def px(x: float) -> float:
        return _MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return _MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH:g}" height="{_HEIGHT:g}" '
        f'viewBox="0 0 {_WIDTH:g} {_HEIGHT:g}">',
        f'<rect width="{_WIDTH:g}" height="{_HEIGHT:g}" fill="white"/>',
        f'<text x="{_coord(_WIDTH / 2)}" y="18" text-anchor="middle" '
        f'font-family="monospace" font-size="13">{escape(title)}</text>',
    ]
    axis_bottom = _HEIGHT - _MARGIN_BOTTOM
    parts.append(
        f'<line x1="{_coord(_MARGIN_LEFT)}" y1="{_coord(_MARGIN_TOP)}" '
        f'x2="{_coord(_MARGIN_LEFT)}" y2="{_coord(axis_bottom)}" stroke="black"/>'
    )
    parts.append(
        f'<line x1="{_coord(_MARGIN_LEFT)}" y1="{_coord(axis_bottom)}" '
        f'x2="{_coord(_WIDTH - _MARGIN_RIGHT)}" y2="{_coord(axis_bottom)}" stroke="black"/>'
    )
    for k in range(_TICKS):
        frac = k / (_TICKS - 1)
        x_val = x_lo + frac * (x_hi - x_lo)
        x_pos = px(x_val)
        parts.append(
            f'<line x1="{_coord(x_pos)}" y1="{_coord(axis_bottom)}" '
            f'x2="{_coord(x_pos)}" y2="{_coord(axis_bottom + 5)}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{_coord(x_pos)}" y="{_coord(axis_bottom + 18)}" text-anchor="middle" '
            f'font-family="monospace" font-size="11">{_tick_label(x_val)}</text>'
        )
        y_val = y_lo + frac * (y_hi - y_lo)
        y_pos = py(y_val)
        parts.append(
            f'<line x1="{_coord(_MARGIN_LEFT - 5)}" y1="{_coord(y_pos)}" '
            f'x2="{_coord(_MARGIN_LEFT)}" y2="{_coord(y_pos)}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{_coord(_MARGIN_LEFT - 8)}" y="{_coord(y_pos + 4)}" text-anchor="end" '
            f'font-family="monospace" font-size="11">{_tick_label(y_val)}</text>'
        )
    parts.append(
        f'<text x="{_coord(_MARGIN_LEFT + plot_w / 2)}" y="{_coord(_HEIGHT - 8)}" '
        f'text-anchor="middle" font-family="monospace" font-size="12">{escape(x_label)}</text>'
    )
    y_mid = _MARGIN_TOP + plot_h / 2
    parts.append(
        f'<text x="14" y="{_coord(y_mid)}" text-anchor="middle" font-family="monospace" '
        f'font-size="12" transform="rotate(-90 14 {_coord(y_mid)})">{escape(y_label)}</text>'
    )
    points = " ".join(f"{_coord(px(x))},{_coord(py(y))}" for x, y in zip(xs, ys))
    parts.append(f'<polyline fill="none" stroke="#1f5fbf" stroke-width="1" points="{points}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def bipartite_panel(
    labels: Sequence[str],
    blue_edges: Sequence[tuple[int, int, float]],
    red_edges: Sequence[tuple[int, int, float]],
    title: str,
) -> str:
    """Two mirrored label columns with weighted connection lines.

    Blue edges render consonant pairs, red edges dissonant ones; stroke width
    and opacity both scale with weight relative to the heaviest edge of
    either color.
    """
    n = len(labels)
    if n < 2:
        raise ValueError("a bipartite panel needs at least two labels")
    height = _MARGIN_TOP + 24.0 * n + 20.0
    left_x = 80.0
    right_x = _WIDTH - 80.0
    wmax = max((w for _, _, w in list(blue_edges) + list(red_edges)), default=0.0)

    def row_y(i: int) -> float:
        return _MARGIN_TOP + 24.0 * i + 12.0

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH:g}" height="{height:g}" '
        f'viewBox="0 0 {_WIDTH:g} {height:g}">',
        f'<rect width="{_WIDTH:g}" height="{height:g}" fill="white"/>',
        f'<text x="{_coord(_WIDTH / 2)}" y="18" text-anchor="middle" '
        f'font-family="monospace" font-size="13">{escape(title)}</text>',
    ]
    for color, edges in (("#1f5fbf", blue_edges), ("#bf1f1f", red_edges)):
        for i, j, w in edges:
            scale = w / wmax if wmax > 0 else 0.0
            parts.append(
                f'<line x1="{_coord(left_x + 6)}" y1="{_coord(row_y(i))}" '
                f'x2="{_coord(right_x - 6)}" y2="{_coord(row_y(j))}" stroke="{color}" '
                f'stroke-width="{_coord(0.5 + 2.5 * scale)}" '
                f'stroke-opacity="{_coord(0.25 + 0.75 * scale)}"/>'
            )
    for i, label in enumerate(labels):
        y = row_y(i)
        parts.append(
            f'<text x="{_coord(left_x)}" y="{_coord(y + 4)}" text-anchor="end" '
            f'font-family="monospace" font-size="12">{escape(label)}</text>'
        )
        parts.append(
            f'<text x="{_coord(right_x)}" y="{_coord(y + 4)}" text-anchor="start" '
            f'font-family="monospace" font-size="12">{escape(label)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
