"""Minimal deterministic SVG plots of experiment records."""
from __future__ import annotations

import math
from html import escape
from typing import NamedTuple, Sequence

import numpy as np

from .errors import SchemaError

WIDTH, HEIGHT = 640, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 20, 40, 60
COLORS = ("#1f77b4", "#d95319", "#2ca02c", "#9467bd", "#8c564b", "#e377c2")


class BoxStats(NamedTuple):
    q1: float
    median: float
    q3: float
    whisker_lo: float
    whisker_hi: float
    outliers: tuple[float, ...]


def box_stats(values: Sequence[float]) -> BoxStats:
    """Quartiles (linear interpolation), whiskers at the most extreme points within 1.5 IQR."""
    v = np.asarray([x for x in values if math.isfinite(x)], dtype=float)
    if v.size == 0:
        raise ValueError("no finite values")
    q1, med, q3 = (float(x) for x in np.percentile(v, [25, 50, 75]))
    iqr = q3 - q1
    lo_fence, hi_fence = q1 - 1.5 * iqr, q3 + 1.5 * iqr
    inside = v[(v >= lo_fence) & (v <= hi_fence)]
    outliers = tuple(sorted(float(x) for x in v[(v < lo_fence) | (v > hi_fence)]))
    return BoxStats(q1, med, q3, float(inside.min()), float(inside.max()), outliers)


def _f(x: float) -> str:
    return f"{x:.2f}"


def _label(v: float) -> str:
    return f"{v:.3g}"


class _Axis:
    def __init__(self, lo: float, hi: float, log: bool):
        if log:
            if lo <= 0:
                raise ValueError("log scale needs positive values")
            lo, hi = math.log10(lo), math.log10(hi)
        if hi == lo:
            lo, hi = lo - 0.5, hi + 0.5
        pad = 0.05 * (hi - lo)
        self.lo, self.hi, self.log = lo - pad, hi + pad, log

    def __call__(self, v: float) -> float:
        t = math.log10(v) if self.log else v
        frac = (t - self.lo) / (self.hi - self.lo)
        return MARGIN_T + (1 - frac) * (HEIGHT - MARGIN_T - MARGIN_B)

    def ticks(self, n: int = 5) -> list[float]:
        vals = np.linspace(self.lo, self.hi, n)
        return [10**t if self.log else t for t in vals]


def _frame(title: str, y: _Axis, ylabel: str) -> list[str]:
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2}" y="24" text-anchor="middle" font-family="sans-serif" font-size="14">{escape(title)}</text>',
        f'<line x1="{MARGIN_L}" y1="{MARGIN_T}" x2="{MARGIN_L}" y2="{HEIGHT - MARGIN_B}" stroke="black"/>',
        f'<line x1="{MARGIN_L}" y1="{HEIGHT - MARGIN_B}" x2="{WIDTH - MARGIN_R}" y2="{HEIGHT - MARGIN_B}" stroke="black"/>',
        f'<text x="16" y="{HEIGHT / 2}" transform="rotate(-90 16 {HEIGHT / 2})" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{escape(ylabel)}</text>',
    ]
    for t in y.ticks():
        py = y(t)
        out.append(f'<line x1="{MARGIN_L - 4}" y1="{_f(py)}" x2="{MARGIN_L}" y2="{_f(py)}" stroke="black"/>')
        out.append(
            f'<text x="{MARGIN_L - 6}" y="{_f(py + 4)}" text-anchor="end" font-family="sans-serif" font-size="10">{_label(t)}</text>'
        )
    return out


def boxplot_svg(columns: dict[str, Sequence[float]], log: bool = False, title: str = "") -> str:
    stats = {k: box_stats(v) for k, v in columns.items()}
    allv = [x for s in stats.values() for x in (s.whisker_lo, s.whisker_hi, *s.outliers)]
    y = _Axis(min(allv), max(allv), log)
    out = _frame(title, y, "value (log scale)" if log else "value")
    n = len(stats)
    slot = (WIDTH - MARGIN_L - MARGIN_R) / n
    half = min(30.0, slot / 4)
    for i, (name, s) in enumerate(stats.items()):
        cx = MARGIN_L + slot * (i + 0.5)
        top, bot = y(s.q3), y(s.q1)
        out.append(f'<line x1="{_f(cx)}" y1="{_f(y(s.whisker_hi))}" x2="{_f(cx)}" y2="{_f(top)}" stroke="black" stroke-dasharray="4 2"/>')
        out.append(f'<line x1="{_f(cx)}" y1="{_f(bot)}" x2="{_f(cx)}" y2="{_f(y(s.whisker_lo))}" stroke="black" stroke-dasharray="4 2"/>')
        for w in (s.whisker_lo, s.whisker_hi):
            out.append(f'<line x1="{_f(cx - half / 2)}" y1="{_f(y(w))}" x2="{_f(cx + half / 2)}" y2="{_f(y(w))}" stroke="black"/>')
        out.append(
            f'<rect class="box" x="{_f(cx - half)}" y="{_f(top)}" width="{_f(2 * half)}" height="{_f(bot - top)}" '
            f'fill="none" stroke="{COLORS[0]}"/>'
        )
        out.append(f'<line class="median" x1="{_f(cx - half)}" y1="{_f(y(s.median))}" x2="{_f(cx + half)}" y2="{_f(y(s.median))}" stroke="red"/>')
        for o in s.outliers:
            py = y(o)
            out.append(
                f'<path class="outlier" d="M{_f(cx - 3)} {_f(py - 3)}L{_f(cx + 3)} {_f(py + 3)}M{_f(cx - 3)} {_f(py + 3)}L{_f(cx + 3)} {_f(py - 3)}" stroke="red"/>'
            )
        out.append(
            f'<text x="{_f(cx)}" y="{HEIGHT - MARGIN_B + 18}" text-anchor="middle" font-family="sans-serif" font-size="11">{escape(name)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def line_svg(x: Sequence[float], series: dict[str, Sequence[float]], log: bool = False, title: str = "", xlabel: str = "") -> str:
    ys = [v for s in series.values() for v in s if math.isfinite(v)]
    if not ys:
        raise ValueError("no finite values to plot")
    y = _Axis(min(ys), max(ys), log)
    out = _frame(title, y, "mean (log scale)" if log else "mean")
    x0, x1 = min(x), max(x)
    span = (x1 - x0) or 1.0

    def px(v):
        return MARGIN_L + (v - x0) / span * (WIDTH - MARGIN_L - MARGIN_R)

    for v in x:
        out.append(
            f'<text x="{_f(px(v))}" y="{HEIGHT - MARGIN_B + 16}" text-anchor="middle" font-family="sans-serif" font-size="9">{_label(v)}</text>'
        )
    out.append(f'<text x="{WIDTH / 2}" y="{HEIGHT - 12}" text-anchor="middle" font-family="sans-serif" font-size="12">{escape(xlabel)}</text>')
    for k, (name, vals) in enumerate(series.items()):
        color = COLORS[k % len(COLORS)]
        pts = [(px(a), y(b)) for a, b in zip(x, vals) if math.isfinite(b)]
        if pts:
            d = " ".join(f"{_f(a)},{_f(b)}" for a, b in pts)
            out.append(f'<polyline class="series" points="{d}" fill="none" stroke="{color}" stroke-width="1.5"/>')
            for a, b in pts:
                out.append(f'<circle cx="{_f(a)}" cy="{_f(b)}" r="2.5" fill="{color}"/>')
        out.append(
            f'<text x="{WIDTH - MARGIN_R - 4}" y="{MARGIN_T + 14 * (k + 1)}" text-anchor="end" font-family="sans-serif" '
            f'font-size="11" fill="{color}">{escape(name)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_records(records: Sequence[dict], kind: str, columns: Sequence[str], group: str | None = None,
                 log: bool = False, title: str = "") -> str:
    """Render records as a boxplot per column, or column means against ``group``."""
    if not records:
        raise SchemaError("no records to plot")
    known = set(records[0])
    for c in list(columns) + ([group] if group else []):
        if c not in known:
            raise SchemaError(f"unknown column {c!r}; available: {sorted(known)}")
    if kind == "boxplot":
        return boxplot_svg({c: [float(r[c]) for r in records] for c in columns}, log=log, title=title)
    if kind == "line":
        if not group:
            raise SchemaError("line plots need a grouping column")
        keys = sorted({float(r[group]) for r in records})
        series = {}
        for c in columns:
            means = []
            for g in keys:
                v = np.array([float(r[c]) for r in records if float(r[group]) == g])
                v = v[~np.isnan(v)]
                with np.errstate(over="ignore", invalid="ignore"):
                    means.append(float(v.mean()) if v.size else math.nan)
            series[c] = means
        return line_svg(keys, series, log=log, title=title, xlabel=group)
    raise SchemaError(f"plot kind must be 'boxplot' or 'line', got {kind!r}")
