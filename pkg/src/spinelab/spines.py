"""Minimal spines on a flat torus: fibers, counts, lengths, systole.

Each trivalent geodesic spine on the torus of a reduced point z0 is tagged
by a unique marker w = z0 + n lying in the oriented hexagon region, so the
set of spines is enumerated by scanning the integers n for which z0 + n is
a member.  The wedge conditions Arg w < 2pi/3 and Arg(w - 1) > pi/3 confine
Re w to the window (-Im w / sqrt(3), 1 + Im w / sqrt(3)), which certifies a
finite scan.  Unoriented spines are the same orbit extended by the mirror
w -> -conj(w) + n.

The total normalized length of the spine with marker w has the closed form

    L(w) = sqrt((1 + |w|^2 - Re w + sqrt(3) Im w) / Im w),

and the spine systole (length of the shortest spine) is the same expression
with |Re| at the reduced point.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import hexagon
from .halfplane import (
    SQRT3,
    TorusKind,
    classify_torus,
    reduce_to_fundamental_domain,
    require_upper,
)
from .hexagon import (
    HexTriple,
    edge_lengths_normalized,
    fermat_tripod,
    membership_oriented,
    membership_unoriented,
)

#: Absolute tolerance declaring two normalized lengths equal.
LENGTH_TIE_TOL = 1e-9


class OutsideImageWarning(UserWarning):
    """Length requested at a point no hexagon class maps to."""


@dataclass(frozen=True)
class SpineClass:
    """One minimal spine on a torus, identified by its marker point."""

    triple: HexTriple
    marker: complex
    oriented: bool
    edge_lengths: tuple[float, float, float]
    total_length: float


@dataclass(frozen=True)
class FiberResult:
    """All minimal spines on one torus, sorted by length then triple."""

    torus: complex
    kind: TorusKind
    spines: list[SpineClass] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.spines)


def length_L(z: complex) -> float:
    """Normalized total length of the spine whose marker is z.

    Warns when z is outside the closure of the marker region, where the
    value no longer measures any spine.
    """
    z = require_upper(z)
    if not _in_image_closure(z):
        warnings.warn(
            f"{z} is outside the closure of the marker region", OutsideImageWarning,
            stacklevel=2,
        )
    y = z.imag
    return math.sqrt((1.0 + abs(z) ** 2 - z.real + SQRT3 * y) / y)


def spine_systole(z: complex) -> float:
    """Length of the shortest spine on the torus of z."""
    z0 = reduce_to_fundamental_domain(z).z0
    y = z0.imag
    return math.sqrt((1.0 + abs(z0) ** 2 - abs(z0.real) + SQRT3 * y) / y)


def systole_field(re_nodes, im_nodes) -> np.ndarray:
    """Spine systole on a rectangular grid, shaped (len(im), len(re)).

    Grid points inside the fundamental domain are evaluated vectorized;
    the rest are reduced individually.
    """
    re = np.asarray(re_nodes, dtype=float)
    im = np.asarray(im_nodes, dtype=float)
    if np.any(im <= 0.0):
        raise ValueError("grid points must satisfy Im > 0")
    x, y = np.meshgrid(re, im)
    r2 = x * x + y * y
    out = np.sqrt((1.0 + r2 - np.abs(x) + SQRT3 * y) / y)
    outside = (r2 < 1.0) | (np.abs(x) > 0.5)
    for i, j in np.argwhere(outside):
        out[i, j] = spine_systole(complex(x[i, j], y[i, j]))
    return out


def _in_image_closure(z: complex, snap: float = hexagon.SNAP_TOL) -> bool:
    ph0 = math.atan2(z.imag, z.real)
    ph1 = math.atan2(z.imag, z.real - 1.0)
    if ph0 > hexagon.TWO_PI_3 + snap or ph1 < hexagon.PI_3 - snap:
        return False
    left = z.real <= 0.5 + snap and abs(z) >= 1.0 - snap
    right = z.real >= 0.5 - snap and abs(z - 1.0) >= 1.0 - snap
    return left or right


def _spine_class(marker: complex, oriented: bool) -> SpineClass:
    triple = fermat_tripod(marker)
    if triple is None:
        raise RuntimeError(f"marker {marker} passed membership but degenerates")
    edges = edge_lengths_normalized(triple)
    return SpineClass(
        triple=triple,
        marker=marker,
        oriented=oriented,
        edge_lengths=edges,
        total_length=edges[0] + edges[1] + edges[2],
    )


def _sorted_fiber(torus: complex, classes: list[SpineClass]) -> FiberResult:
    classes.sort(key=lambda s: (s.total_length, s.triple.as_tuple()))
    return FiberResult(torus=torus, kind=classify_torus(torus), spines=classes)


def _scan_range(y: float, x_lo: float, x_hi: float) -> range:
    # one extra unit of slack on both sides of the certified window
    lo = math.floor(-y / SQRT3 - x_hi) - 1
    hi = math.ceil(1.0 + y / SQRT3 - x_lo) + 1
    return range(lo, hi + 1)


def fiber_oriented(z: complex) -> FiberResult:
    """All minimal spines of the torus of z, up to orientation-preserving
    isometries."""
    z0 = reduce_to_fundamental_domain(z).z0
    classes = []
    for n in _scan_range(z0.imag, z0.real, z0.real):
        w = z0 + n
        if membership_oriented(w).inside:
            classes.append(_spine_class(w, oriented=True))
    return _sorted_fiber(z0, classes)


def fiber_unoriented(z: complex) -> FiberResult:
    """All minimal spines of the torus of z, up to all isometries."""
    z0 = reduce_to_fundamental_domain(z).z0
    y = z0.imag
    markers: list[complex] = []
    for x in (z0.real, -z0.real):
        for n in _scan_range(y, x, x):
            w = complex(x + n, y)
            if membership_unoriented(w).inside and all(
                abs(w - u) > LENGTH_TIE_TOL for u in markers
            ):
                markers.append(w)
    classes = [_spine_class(w, oriented=False) for w in markers]
    return _sorted_fiber(z0, classes)


def count_oriented(z: complex) -> int:
    return fiber_oriented(z).count


def count_unoriented(z: complex) -> int:
    return fiber_unoriented(z).count


def minimal_spines(z: complex, oriented: bool = True) -> list[SpineClass]:
    """The fiber members of minimal total length (ties within 1e-9)."""
    fiber = fiber_oriented(z) if oriented else fiber_unoriented(z)
    shortest = fiber.spines[0].total_length
    return [s for s in fiber.spines if s.total_length <= shortest + LENGTH_TIE_TOL]


def length_spectrum(
    z: complex, oriented: bool = True
) -> list[tuple[tuple[float, float, float], float]]:
    """Per-spine decreasing edge-length triples with totals, sorted by total."""
    fiber = fiber_oriented(z) if oriented else fiber_unoriented(z)
    entries = [
        (tuple(sorted(s.edge_lengths, reverse=True)), s.total_length)
        for s in fiber.spines
    ]
    entries.sort(key=lambda e: (e[1], e[0]))
    return entries
