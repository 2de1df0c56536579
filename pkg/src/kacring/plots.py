"""Minimal deterministic SVG charts, no plotting dependency.

The output is a plain static SVG with a fixed palette, fixed geometry,
and coordinates rounded to two decimals, so rerunning a command with the
same data writes byte-identical files. These are quick-look plots, not a
charting library: one line chart and one bar chart cover the toolkit's
outputs.
"""

from __future__ import annotations

import numpy as np

__all__ = ["line_chart", "bar_chart"]

_WIDTH = 640.0
_HEIGHT = 420.0
_MARGIN_LEFT = 62.0
_MARGIN_RIGHT = 18.0
_MARGIN_TOP = 34.0
_MARGIN_BOTTOM = 48.0

_PALETTE = ("#1f6fb2", "#c8452c", "#3a8f4d", "#8a5fb8", "#b08a1e", "#5a5a5a")


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _axis_range(values: np.ndarray) -> tuple[float, float]:
    lo = float(values.min())
    hi = float(values.max())
    if lo == hi:
        pad = 1.0 if lo == 0 else abs(lo) * 0.1
        return lo - pad, hi + pad
    return lo, hi


def _scale(value: float, lo: float, hi: float, out_lo: float, out_hi: float) -> float:
    return out_lo + (value - lo) * (out_hi - out_lo) / (hi - lo)


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def _header(title: str, x_label: str, y_label: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(_WIDTH)}" '
        f'height="{int(_HEIGHT)}" viewBox="0 0 {int(_WIDTH)} {int(_HEIGHT)}">',
        f'<rect width="{int(_WIDTH)}" height="{int(_HEIGHT)}" fill="#ffffff"/>',
        f'<text x="{_fmt(_WIDTH / 2)}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
        f'<text x="{_fmt(_WIDTH / 2)}" y="{_fmt(_HEIGHT - 10)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{x_label}</text>',
        f'<text x="16" y="{_fmt(_HEIGHT / 2)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 16 {_fmt(_HEIGHT / 2)})">{y_label}</text>',
    ]


def _axes(x_lo, x_hi, y_lo, y_hi) -> list[str]:
    x0, x1 = _MARGIN_LEFT, _WIDTH - _MARGIN_RIGHT
    y0, y1 = _HEIGHT - _MARGIN_BOTTOM, _MARGIN_TOP
    parts = [
        f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y0)}" '
        f'stroke="#333333" stroke-width="1"/>',
        f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x0)}" y2="{_fmt(y1)}" '
        f'stroke="#333333" stroke-width="1"/>',
    ]
    for tick in _ticks(x_lo, x_hi):
        px = _scale(tick, x_lo, x_hi, x0, x1)
        parts.append(
            f'<text x="{_fmt(px)}" y="{_fmt(y0 + 16)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{tick:.4g}</text>'
        )
    for tick in _ticks(y_lo, y_hi):
        py = _scale(tick, y_lo, y_hi, y0, y1)
        parts.append(
            f'<text x="{_fmt(x0 - 6)}" y="{_fmt(py + 3)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">{tick:.4g}</text>'
        )
    return parts


def line_chart(path, series, title: str, x_label: str, y_label: str) -> None:
    """Write a polyline chart.

    Parameters
    ----------
    path : str or Path
        Output file, written with a trailing newline.
    series : sequence of (label, x array, y array)
        Drawn in order with the fixed palette cycling; labels go into a
        legend in the top-right corner.
    """
    series = [(label, np.asarray(x, float), np.asarray(y, float)) for label, x, y in series]
    all_x = np.concatenate([x for _, x, _ in series])
    all_y = np.concatenate([y for _, _, y in series])
    x_lo, x_hi = _axis_range(all_x)
    y_lo, y_hi = _axis_range(all_y)
    x0, x1 = _MARGIN_LEFT, _WIDTH - _MARGIN_RIGHT
    y0, y1 = _HEIGHT - _MARGIN_BOTTOM, _MARGIN_TOP

    parts = _header(title, x_label, y_label) + _axes(x_lo, x_hi, y_lo, y_hi)
    for index, (label, x, y) in enumerate(series):
        color = _PALETTE[index % len(_PALETTE)]
        coords = " ".join(
            f"{_fmt(_scale(xi, x_lo, x_hi, x0, x1))},{_fmt(_scale(yi, y_lo, y_hi, y0, y1))}"
            for xi, yi in zip(x, y)
        )
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        if label:
            ly = _MARGIN_TOP + 14 * index
            parts.append(
                f'<line x1="{_fmt(x1 - 110)}" y1="{_fmt(ly)}" x2="{_fmt(x1 - 90)}" '
                f'y2="{_fmt(ly)}" stroke="{color}" stroke-width="1.5"/>'
            )
            parts.append(
                f'<text x="{_fmt(x1 - 84)}" y="{_fmt(ly + 3)}" '
                f'font-family="sans-serif" font-size="10">{label}</text>'
            )
    parts.append("</svg>")
    with open(path, "w", newline="") as handle:
        handle.write("\n".join(parts) + "\n")


def bar_chart(path, labels, values, title: str, x_label: str, y_label: str) -> None:
    """Write a bar chart with one bar per (label, value) pair."""
    values = np.asarray(values, dtype=np.float64)
    y_lo = min(0.0, float(values.min()))
    y_hi = float(values.max())
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    x0, x1 = _MARGIN_LEFT, _WIDTH - _MARGIN_RIGHT
    y0, y1 = _HEIGHT - _MARGIN_BOTTOM, _MARGIN_TOP

    parts = _header(title, x_label, y_label)
    parts.append(
        f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y0)}" '
        f'stroke="#333333" stroke-width="1"/>'
    )
    for tick in _ticks(y_lo, y_hi):
        py = _scale(tick, y_lo, y_hi, y0, y1)
        parts.append(
            f'<text x="{_fmt(x0 - 6)}" y="{_fmt(py + 3)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">{tick:.4g}</text>'
        )

    count = len(values)
    slot = (x1 - x0) / count
    bar_width = slot * 0.8
    label_step = max(1, count // 16)
    for index, value in enumerate(values):
        left = x0 + index * slot + slot * 0.1
        top = _scale(float(value), y_lo, y_hi, y0, y1)
        parts.append(
            f'<rect x="{_fmt(left)}" y="{_fmt(min(top, y0))}" width="{_fmt(bar_width)}" '
            f'height="{_fmt(abs(y0 - top))}" fill="{_PALETTE[0]}"/>'
        )
        if index % label_step == 0:
            parts.append(
                f'<text x="{_fmt(left + bar_width / 2)}" y="{_fmt(y0 + 16)}" '
                f'text-anchor="middle" font-family="sans-serif" font-size="10">'
                f"{labels[index]}</text>"
            )
    parts.append("</svg>")
    with open(path, "w", newline="") as handle:
        handle.write("\n".join(parts) + "\n")
