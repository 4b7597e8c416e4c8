"""Self-contained SVG rendering of sweep tables.

Outage curves live on a log axis spanning a handful of decades, which a
few hundred lines of direct SVG emission handle without pulling a plotting
stack into the dependency set.
"""

from __future__ import annotations

import math
import os

from .tableio import read_csv

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)

_WIDTH = 760
_HEIGHT = 520
_MARGIN_LEFT = 70
_MARGIN_RIGHT = 180
_MARGIN_TOP = 24
_MARGIN_BOTTOM = 56


class PlotDataError(ValueError):
    """Raised when a table holds nothing that can be drawn."""


def _group_label(scheme: str, n_relays: int, secrecy_rate: float) -> str:
    parts = [scheme]
    if scheme != "direct":
        parts.append(f"N={n_relays}")
    parts.append(f"rate={secrecy_rate:g}")
    return " ".join(parts)


def _decade_label(exponent: int) -> str:
    return f"1e{exponent}" if exponent else "1"


def emit_plot(csv_path: str | os.PathLike, out_path: str | os.PathLike) -> None:
    """Render the sweep CSV at csv_path to an SVG file at out_path.

    One polyline per (scheme, n_relays, secrecy_rate) group, linear SNR
    on x, log outage probability on y.  Zero estimates cannot be placed
    on a log axis and are skipped point-wise.
    """
    table = read_csv(csv_path)
    if not table.rows:
        raise PlotDataError("table has no data rows to plot")

    groups: dict[tuple[str, int, float], list[tuple[float, float]]] = {}
    for row in table.rows:
        key = (row.scheme, row.n_relays, row.secrecy_rate)
        groups.setdefault(key, []).append((row.gamma_s_db, row.estimate.estimate))

    xs = [row.gamma_s_db for row in table.rows]
    positive = [row.estimate.estimate for row in table.rows if row.estimate.estimate > 0.0]
    if not positive:
        raise PlotDataError("all estimates are zero; nothing to place on a log axis")

    x_lo, x_hi = min(xs), max(xs)
    x_span = x_hi - x_lo if x_hi > x_lo else 1.0
    exp_lo = math.floor(math.log10(min(positive)))
    exp_hi = math.ceil(math.log10(max(positive)))
    if exp_hi <= exp_lo:
        exp_hi = exp_lo + 1

    plot_w = _WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def px(x: float) -> float:
        return _MARGIN_LEFT + (x - x_lo) / x_span * plot_w

    def py(y: float) -> float:
        frac = (math.log10(y) - exp_lo) / (exp_hi - exp_lo)
        return _MARGIN_TOP + (1.0 - frac) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<rect x="{_MARGIN_LEFT}" y="{_MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#333" stroke-width="1"/>',
    ]

    # horizontal decade grid + y tick labels
    for exponent in range(exp_lo, exp_hi + 1):
        y = py(10.0 ** exponent)
        out.append(
            f'<line x1="{_MARGIN_LEFT}" y1="{y:.2f}" x2="{_MARGIN_LEFT + plot_w}" y2="{y:.2f}" '
            'stroke="#ddd" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_MARGIN_LEFT - 8}" y="{y + 4:.2f}" text-anchor="end">{_decade_label(exponent)}</text>'
        )

    # x ticks at the unique sweep points
    ticks = sorted(set(xs))
    step = max(1, math.ceil(len(ticks) / 13))
    for value in ticks[::step]:
        x = px(value)
        y0 = _MARGIN_TOP + plot_h
        out.append(f'<line x1="{x:.2f}" y1="{y0}" x2="{x:.2f}" y2="{y0 + 5}" stroke="#333" stroke-width="1"/>')
        out.append(f'<text x="{x:.2f}" y="{y0 + 18}" text-anchor="middle">{value:g}</text>')

    out.append(
        f'<text x="{_MARGIN_LEFT + plot_w / 2:.2f}" y="{_HEIGHT - 14}" text-anchor="middle">gamma_s [dB]</text>'
    )
    out.append(
        f'<text x="18" y="{_MARGIN_TOP + plot_h / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {_MARGIN_TOP + plot_h / 2:.2f})">secrecy outage probability</text>'
    )

    legend_x = _MARGIN_LEFT + plot_w + 16
    legend_y = _MARGIN_TOP + 10
    for i, (key, points) in enumerate(sorted(groups.items())):
        color = _PALETTE[i % len(_PALETTE)]
        drawable = [(px(x), py(y)) for x, y in sorted(points) if y > 0.0]
        if drawable:
            coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in drawable)
            out.append(
                f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>'
            )
            for x, y in drawable:
                out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="{color}"/>')
        ly = legend_y + i * 18
        out.append(
            f'<line x1="{legend_x}" y1="{ly - 4}" x2="{legend_x + 22}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        out.append(f'<text x="{legend_x + 28}" y="{ly}">{_group_label(*key)}</text>')

    out.append("</svg>")
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(out) + "\n")
