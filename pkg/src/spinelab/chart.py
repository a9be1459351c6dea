"""Moduli-space heatmaps: grid evaluation, CSV and deterministic SVG.

The charts reproduce the stratification of the spine count (and the spine
systole level sets) over the usual picture of moduli space.  Output is
byte-deterministic for fixed inputs: no timestamps, fixed float formats,
and a categorical palette keyed by the integer count value so a stratum
keeps its color across grids.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._format import fmt_float
from .halfplane import SQRT3
from .spines import count_oriented, count_unoriented, systole_field

QUANTITIES = ("count", "count-no", "systole")

#: Region of the default chart: the fundamental domain plus a tail of the cusp.
DEFAULT_RE_MIN, DEFAULT_RE_MAX = -0.5, 0.5
DEFAULT_IM_MIN, DEFAULT_IM_MAX = 0.85, 5.2
DEFAULT_COLS, DEFAULT_ROWS = 40, 80

# categorical palette keyed by count value (value k uses entry k mod 12)
_PALETTE = [
    "#e6e6e6", "#f2f2f2", "#cfcfe8", "#aac4e0", "#8fd0b0", "#f5d98a",
    "#e8a87c", "#d98c9c", "#b58cd9", "#7cc7e8", "#a8d98c", "#8c9cd9",
]
_GREYS = [
    "#f5f5f5", "#e4e4e4", "#d3d3d3", "#c2c2c2", "#b1b1b1",
    "#9f9f9f", "#8e8e8e", "#7d7d7d", "#6c6c6c", "#5b5b5b",
]


@dataclass(frozen=True)
class GridSpec:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    cols: int
    rows: int

    def __post_init__(self):
        if self.cols < 2 or self.rows < 2:
            raise ValueError("grid needs cols >= 2 and rows >= 2")
        if not self.im_min > 0.0:
            raise ValueError("grid needs im_min > 0")
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("grid extents must be increasing")

    def centers(self) -> tuple[np.ndarray, np.ndarray]:
        """Cell-center coordinates, re (cols,) and im (rows,) bottom-up."""
        dre = (self.re_max - self.re_min) / self.cols
        dim = (self.im_max - self.im_min) / self.rows
        re = self.re_min + dre * (np.arange(self.cols) + 0.5)
        im = self.im_min + dim * (np.arange(self.rows) + 0.5)
        return re, im


def default_grid() -> GridSpec:
    return GridSpec(
        DEFAULT_RE_MIN, DEFAULT_RE_MAX, DEFAULT_IM_MIN, DEFAULT_IM_MAX,
        DEFAULT_COLS, DEFAULT_ROWS,
    )


def thread_count() -> int:
    """Worker cap from SPINELAB_THREADS; 0 or unset means automatic."""
    raw = os.environ.get("SPINELAB_THREADS", "").strip()
    n = 0
    if raw:
        try:
            n = int(raw)
        except ValueError as exc:
            raise ValueError(f"SPINELAB_THREADS must be an integer, got {raw!r}") from exc
    if n <= 0:
        return min(8, os.cpu_count() or 1)
    return n


def heatmap_values(grid: GridSpec, quantity: str, threads: int | None = None) -> np.ndarray:
    """Quantity at the cell centers, shaped (rows, cols), bottom row first."""
    if quantity not in QUANTITIES:
        raise ValueError(f"quantity must be one of {QUANTITIES}, got {quantity!r}")
    re, im = grid.centers()
    if quantity == "systole":
        return systole_field(re, im)
    counter = count_oriented if quantity == "count" else count_unoriented
    workers = thread_count() if threads is None else max(1, threads)

    def one_row(y: float) -> list[int]:
        return [counter(complex(x, y)) for x in re]

    if workers == 1:
        rows = [one_row(y) for y in im]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(one_row, im))
    return np.array(rows, dtype=float)


def heatmap_csv(grid: GridSpec, values: np.ndarray, quantity: str) -> str:
    """Row-major CSV (bottom row first), comma separated, LF line ends."""
    re, im = grid.centers()
    name = quantity.replace("-", "_")
    lines = [f"re,im,{name}"]
    integral = quantity != "systole"
    for i, y in enumerate(im):
        for j, x in enumerate(re):
            v = values[i, j]
            cell = str(int(round(v))) if integral else fmt_float(v)
            lines.append(f"{fmt_float(x)},{fmt_float(y)},{cell}")
    return "\n".join(lines) + "\n"


def _color_for_count(k: int) -> str:
    return _PALETTE[int(k) % len(_PALETTE)]


def _systole_bands(values: np.ndarray) -> tuple[float, float]:
    return float(values.min()), float(values.max())


def _band_index(v: float, lo: float, hi: float) -> int:
    if hi <= lo:
        return 0
    t = (v - lo) / (hi - lo)
    return min(len(_GREYS) - 1, int(t * len(_GREYS)))


def heatmap_svg(grid: GridSpec, values: np.ndarray, quantity: str) -> str:
    """Render the grid as an SVG 1.1 chart with axes, legend and the
    fundamental-domain outline."""
    ml, mr, mt, mb = 70.0, 170.0, 20.0, 50.0
    pw, ph = 500.0, 500.0
    width, height = ml + pw + mr, mt + ph + mb
    sx = pw / (grid.re_max - grid.re_min)
    sy = ph / (grid.im_max - grid.im_min)

    def px(x: float) -> float:
        return ml + (x - grid.re_min) * sx

    def py(y: float) -> float:
        return mt + (grid.im_max - y) * sy

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<defs><clipPath id="plot"><rect x="{ml:.2f}" y="{mt:.2f}" '
        f'width="{pw:.2f}" height="{ph:.2f}"/></clipPath></defs>',
        f'<rect x="0" y="0" width="{width:.0f}" height="{height:.0f}" fill="#ffffff"/>',
    ]
    dre = (grid.re_max - grid.re_min) / grid.cols
    dim = (grid.im_max - grid.im_min) / grid.rows
    integral = quantity != "systole"
    lo = hi = 0.0
    if not integral:
        lo, hi = _systole_bands(values)
    out.append('<g clip-path="url(#plot)">')
    for i in range(grid.rows):
        y_top = py(grid.im_min + (i + 1) * dim)
        for j in range(grid.cols):
            v = values[i, j]
            fill = (
                _color_for_count(int(round(v)))
                if integral
                else _GREYS[_band_index(float(v), lo, hi)]
            )
            out.append(
                f'<rect x="{px(grid.re_min + j * dre):.2f}" y="{y_top:.2f}" '
                f'width="{dre * sx + 0.5:.2f}" height="{dim * sy + 0.5:.2f}" '
                f'fill="{fill}"/>'
            )
    # fundamental-domain outline: verticals at re = +-1/2 and the unit arc,
    # the arc sampled at fixed resolution (angles 2pi/3 down to pi/3)
    top = grid.im_max
    pieces = [f"M {px(-0.5):.2f} {py(top):.2f} L {px(-0.5):.2f} {py(SQRT3 / 2.0):.2f}"]
    for k in range(1, 65):
        ang = 2.0 * math.pi / 3.0 - k * (math.pi / 3.0) / 64.0
        pieces.append(f"L {px(math.cos(ang)):.2f} {py(math.sin(ang)):.2f}")
    pieces.append(f"L {px(0.5):.2f} {py(top):.2f}")
    out.append(
        f'<path d="{" ".join(pieces)}" fill="none" stroke="#000000" '
        f'stroke-width="1.5"/>'
    )
    out.append("</g>")
    # axes
    out.append(
        f'<rect x="{ml:.2f}" y="{mt:.2f}" width="{pw:.2f}" height="{ph:.2f}" '
        f'fill="none" stroke="#333333" stroke-width="1"/>'
    )
    font = 'font-family="monospace" font-size="12"'
    for x in (grid.re_min, 0.0, grid.re_max):
        if grid.re_min <= x <= grid.re_max:
            out.append(
                f'<text x="{px(x):.2f}" y="{mt + ph + 18:.2f}" '
                f'text-anchor="middle" {font}>{x:.6g}</text>'
            )
    for y in (grid.im_min, grid.im_max):
        out.append(
            f'<text x="{ml - 8:.2f}" y="{py(y) + 4:.2f}" '
            f'text-anchor="end" {font}>{y:.6g}</text>'
        )
    out.append(
        f'<text x="{ml + pw / 2:.2f}" y="{mt + ph + 36:.2f}" '
        f'text-anchor="middle" {font}>Re</text>'
    )
    out.append(
        f'<text x="{ml - 40:.2f}" y="{mt + ph / 2:.2f}" '
        f'text-anchor="middle" {font}>Im</text>'
    )
    # legend
    lx = ml + pw + 20.0
    if integral:
        levels = sorted({int(round(v)) for v in values.ravel()})
        out.append(f'<text x="{lx:.2f}" y="{mt + 12:.2f}" {font}>{quantity}</text>')
        for k, val in enumerate(levels):
            y0 = mt + 24.0 + 20.0 * k
            out.append(
                f'<rect x="{lx:.2f}" y="{y0:.2f}" width="14" height="14" '
                f'fill="{_color_for_count(val)}" stroke="#333333" stroke-width="0.5"/>'
            )
            out.append(
                f'<text x="{lx + 20:.2f}" y="{y0 + 12:.2f}" {font}>{val}</text>'
            )
    else:
        out.append(f'<text x="{lx:.2f}" y="{mt + 12:.2f}" {font}>{quantity}</text>')
        for k, shade in enumerate(_GREYS):
            y0 = mt + 24.0 + 20.0 * k
            a = lo + (hi - lo) * k / len(_GREYS)
            b = lo + (hi - lo) * (k + 1) / len(_GREYS)
            out.append(
                f'<rect x="{lx:.2f}" y="{y0:.2f}" width="14" height="14" '
                f'fill="{shade}" stroke="#333333" stroke-width="0.5"/>'
            )
            out.append(
                f'<text x="{lx + 20:.2f}" y="{y0 + 12:.2f}" {font}>'
                f"{a:.4g} to {b:.4g}</text>"
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
