"""Minimal SVG line charts for growth sweeps.

Hand-written rather than matplotlib so the bytes depend only on the data:
no timestamps, font metrics or backend versions leak into the file.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .errors import ValidationError

WIDTH, HEIGHT = 640, 420
LEFT, RIGHT, TOP, BOTTOM = 72, 24, 24, 56
PALETTE = ("#1f3f8f", "#a3201c", "#2b7a3d", "#7a4b9c", "#b36b00")
DASH = {"solid": None, "dotted": "2,4", "dashdot": "9,4,2,4", "dashed": "8,5"}


@dataclass(frozen=True)
class Series:
    label: str
    points: tuple[tuple[float, float], ...]
    color: str | None = None


@dataclass(frozen=True)
class Marker:
    """Vertical line at burden ``m``."""

    m: float
    style: str = "dotted"
    color: str | None = None
    label: str = ""


@dataclass
class Axes:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    xlabel: str = "Military burden"
    ylabel: str = "Long-run growth rate"
    x_ticks: list[float] = field(default_factory=list)
    y_ticks: list[float] = field(default_factory=list)


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    span = hi - lo
    raw = span / max(target, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(k * mag for k in (1, 2, 2.5, 5, 10) if k * mag >= raw)
    first = math.ceil(lo / step - 1e-9)
    last = math.floor(hi / step + 1e-9)
    return [round(k * step, 12) for k in range(first, last + 1)]


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    text = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def auto_axes(series, markers=()) -> Axes:
    xs = [x for s in series for x, _ in s.points] + [mk.m for mk in markers]
    ys = [y for s in series for _, y in s.points]
    x_min, x_max = min(xs), max(xs)
    y_min, y_max = min(ys), max(ys)
    if x_max == x_min:
        x_min, x_max = x_min - 0.01, x_max + 0.01
    pad = 0.05 * (y_max - y_min) if y_max > y_min else max(abs(y_max) * 0.1, 0.01)
    y_min, y_max = y_min - pad, y_max + pad
    return Axes(x_min, x_max, y_min, y_max,
                x_ticks=nice_ticks(x_min, x_max), y_ticks=nice_ticks(y_min, y_max))


def render_svg(series, markers=(), axes: Axes | None = None, title: str = "") -> str:
    """Render one polyline per series and optional vertical markers."""
    series = list(series)
    markers = list(markers)
    if not series or any(not s.points for s in series):
        raise ValidationError("need at least one non-empty series", "series")
    for mk in markers:
        if mk.style not in DASH:
            raise ValidationError(f"unknown line style {mk.style!r}", "marker.style")
    if axes is None:
        axes = auto_axes(series, markers)
    if not (axes.x_max > axes.x_min and axes.y_max > axes.y_min):
        raise ValidationError("axis bounds must be increasing", "axes")

    pw = WIDTH - LEFT - RIGHT
    ph = HEIGHT - TOP - BOTTOM

    def sx(x):
        return LEFT + (x - axes.x_min) / (axes.x_max - axes.x_min) * pw

    def sy(y):
        return TOP + (axes.y_max - y) / (axes.y_max - axes.y_min) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>')
    out.append(f'<defs><clipPath id="plot"><rect x="{LEFT}" y="{TOP}" '
               f'width="{pw}" height="{ph}"/></clipPath></defs>')

    out.append('<g stroke="#dddddd" stroke-width="1">')
    for t in axes.x_ticks:
        if axes.x_min <= t <= axes.x_max:
            out.append(f'<line x1="{_fmt(sx(t))}" y1="{TOP}" x2="{_fmt(sx(t))}" y2="{TOP + ph}"/>')
    for t in axes.y_ticks:
        if axes.y_min <= t <= axes.y_max:
            out.append(f'<line x1="{LEFT}" y1="{_fmt(sy(t))}" x2="{LEFT + pw}" y2="{_fmt(sy(t))}"/>')
    out.append("</g>")
    if axes.y_min < 0.0 < axes.y_max:
        out.append(f'<line x1="{LEFT}" y1="{_fmt(sy(0.0))}" x2="{LEFT + pw}" '
                   f'y2="{_fmt(sy(0.0))}" stroke="#888888" stroke-width="1"/>')
    out.append(f'<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" '
               'fill="none" stroke="black" stroke-width="1"/>')

    out.append('<g text-anchor="middle">')
    for t in axes.x_ticks:
        if axes.x_min <= t <= axes.x_max:
            out.append(f'<text x="{_fmt(sx(t))}" y="{TOP + ph + 18}">{_tick_label(t)}</text>')
    out.append("</g>")
    out.append('<g text-anchor="end">')
    for t in axes.y_ticks:
        if axes.y_min <= t <= axes.y_max:
            out.append(f'<text x="{LEFT - 6}" y="{_fmt(sy(t) + 4)}">{_tick_label(t)}</text>')
    out.append("</g>")
    out.append(f'<text x="{_fmt(LEFT + pw / 2)}" y="{HEIGHT - 14}" '
               f'text-anchor="middle">{escape(axes.xlabel)}</text>')
    out.append(f'<text x="16" y="{_fmt(TOP + ph / 2)}" text-anchor="middle" '
               f'transform="rotate(-90 16 {_fmt(TOP + ph / 2)})">{escape(axes.ylabel)}</text>')

    out.append('<g clip-path="url(#plot)" fill="none">')
    for i, s in enumerate(series):
        color = s.color or PALETTE[i % len(PALETTE)]
        pts = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in s.points)
        out.append(f'<polyline points="{pts}" stroke="{color}" stroke-width="2"/>')
    for mk in markers:
        color = mk.color or "#444444"
        dash = DASH[mk.style]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<line x1="{_fmt(sx(mk.m))}" y1="{TOP}" x2="{_fmt(sx(mk.m))}" '
                   f'y2="{TOP + ph}" stroke="{color}" stroke-width="2"{dash_attr}/>')
    out.append("</g>")

    out.append('<g font-size="11">')
    lx, ly = LEFT + pw - 150, TOP + ph - 14 - 16 * (len(series) - 1)
    for i, s in enumerate(series):
        color = s.color or PALETTE[i % len(PALETTE)]
        y = ly + 16 * i
        out.append(f'<line x1="{lx}" y1="{y}" x2="{lx + 24}" y2="{y}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 30}" y="{y + 4}">{escape(s.label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_plot(path, series, markers=(), axes: Axes | None = None, title: str = "") -> str:
    """Render and write an SVG file; returns the document text."""
    text = render_svg(series, markers, axes, title)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return text
