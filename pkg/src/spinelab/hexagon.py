"""Semi-regular hexagons and their chart in the upper half-plane.

A Euclidean hexagon with all interior angles 2pi/3 and congruent opposite
sides is determined, up to similarity, by three successive side lengths
(a, b, c).  Gluing opposite sides produces a flat torus whose boundary
becomes a trivalent geodesic graph with 2pi/3 angles, and cutting the torus
along that graph recovers the hexagon.  The half of the graph incident to
one junction is a tripod with leg lengths proportional to (a, b, c); placing
the tripod with the c-leg ending at 0 and the b-leg at 1 puts the a-leg
endpoint at

    lift(a, b, c) = (2c^2 - ab + ac + bc) / (2 (b^2 + c^2 + bc))
                    + i (sqrt(3)/2) (ab + bc + ac) / (b^2 + c^2 + bc),

which satisfies |lift|^2 = (a^2 + c^2 + ac) / (b^2 + c^2 + bc).  The inverse
direction recovers (a, b, c) from a point z as the distances from the
Fermat point of the triangle (0, 1, z) to its vertices; the Fermat point is
interior with three 2pi/3 angles exactly when every triangle angle is below
2pi/3.

Sorted triples (a >= b >= c) fill the region

    Arg z < 2pi/3,   |z| >= 1,   Re z <= 1/2,

and dropping the sorting of b, c mirrors that region across Re = 1/2.  The
boundary loci carry the symmetric hexagons: |z| = 1 holds a = b, Re = 1/2
holds b = c, and the rays Arg z = 2pi/3 from 0 and Arg(z - 1) = pi/3 from 1
are the degenerate c = 0 parallelograms, which are excluded because a
4-valent flat graph is not a spine.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import NonPositiveSideError
from .halfplane import SQRT3, require_upper

TWO_PI_3 = 2.0 * math.pi / 3.0
PI_3 = math.pi / 3.0

#: Inputs closer than this to a region boundary are snapped onto it.
SNAP_TOL = 1e-12

# Degeneracy threshold of the Fermat construction, strictly inside the
# membership snap: markers the region tests accept must never degenerate.
_DEGENERATE_COS = math.cos(TWO_PI_3 - 0.5 * SNAP_TOL)

_ROT60 = complex(0.5, SQRT3 / 2.0)


@dataclass(frozen=True)
class HexTriple:
    """Three successive side lengths of a semi-regular hexagon."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (self.a > 0.0 and self.b > 0.0 and self.c > 0.0):
            raise NonPositiveSideError(f"sides must be positive, got {self.as_tuple()}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)


class RegionKind(enum.Enum):
    INTERIOR = "interior"
    ARC_AB = "arc_ab"
    LINE_BC = "line_bc"
    EXCLUDED_RAY = "excluded_ray"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class RegionMembership:
    inside: bool
    boundary: RegionKind


def normalize_unoriented(a: float, b: float, c: float) -> HexTriple:
    """Canonical unoriented form: sorted descending, scaled to sum one."""
    t = HexTriple(a, b, c).as_tuple()
    s = sum(t)
    x, y, z = sorted(t, reverse=True)
    return HexTriple(x / s, y / s, z / s)


def normalize_oriented(a: float, b: float, c: float) -> HexTriple:
    """Canonical oriented form: cyclic rotation with the maximum first.

    When the maximum is attained more than once, the lexicographically
    largest rotation is taken.
    """
    t = HexTriple(a, b, c).as_tuple()
    s = sum(t)
    rotations = [t, (t[1], t[2], t[0]), (t[2], t[0], t[1])]
    best = max(rotations)
    return HexTriple(best[0] / s, best[1] / s, best[2] / s)


def tilde_p(triple: HexTriple | tuple[float, float, float]) -> complex:
    """Lift a hexagon class to its marker point in the upper half-plane.

    The closed form is evaluated on the oriented canonical rotation, so only
    the cyclic order of the sides matters and the result is scale invariant.
    Sorted triples land in Re <= 1/2; swapping b and c mirrors the marker to
    1 - conj(z).
    """
    if isinstance(triple, HexTriple):
        a, b, c = triple.as_tuple()
    else:
        a, b, c = HexTriple(*triple).as_tuple()
    a, b, c = normalize_oriented(a, b, c).as_tuple()
    den = b * b + c * c + b * c
    re = (2.0 * c * c - a * b + a * c + b * c) / (2.0 * den)
    im = (SQRT3 / 2.0) * (a * b + b * c + a * c) / den
    return complex(re, im)


def _cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


def _equilateral_apex(p: complex, q: complex, opposite: complex) -> complex:
    """Apex of the equilateral triangle on pq lying away from `opposite`."""
    candidate = p + (q - p) * _ROT60
    d = q - p
    if _cross(d, candidate - p) * _cross(d, opposite - p) < 0.0:
        return candidate
    return p + (q - p) * _ROT60.conjugate()


def fermat_point(va: complex, vb: complex, vc: complex) -> complex | None:
    """Fermat-Torricelli point of a triangle, or None when a vertex wins.

    Interior solution exists exactly when every angle is below 2pi/3; it is
    computed as the intersection of two vertex-to-apex lines, each apex being
    the outward equilateral point on the opposite side.
    """
    for p, q, r in ((va, vb, vc), (vb, vc, va), (vc, va, vb)):
        u, v = q - p, r - p
        nu, nv = abs(u), abs(v)
        if nu == 0.0 or nv == 0.0:
            return None
        cosang = (u.real * v.real + u.imag * v.imag) / (nu * nv)
        if cosang <= _DEGENERATE_COS:
            return None
    apex_a = _equilateral_apex(vb, vc, va)
    apex_b = _equilateral_apex(va, vc, vb)
    d1, d2 = apex_a - va, apex_b - vb
    den = _cross(d1, d2)
    s = _cross(vb - va, d2) / den
    return va + s * d1


def fermat_tripod(z: complex) -> HexTriple | None:
    """Hexagon class of the marker z, or None for degenerate markers.

    Returns the distances from the Fermat point F of the triangle (0, 1, z)
    to (z, 1, 0) in that order, scaled to sum one.  None signals that some
    triangle angle reaches 2pi/3, so F collides with a vertex and the
    hexagon degenerates to a parallelogram.
    """
    z = require_upper(z)
    f = fermat_point(0j, complex(1.0, 0.0), z)
    if f is None:
        return None
    t = (abs(z - f), abs(1.0 - f), abs(f))
    s = t[0] + t[1] + t[2]
    return HexTriple(t[0] / s, t[1] / s, t[2] / s)


def membership_oriented(z: complex, snap: float = SNAP_TOL) -> RegionMembership:
    """Decide whether z is the marker of exactly one oriented hexagon class.

    The region is the union of the lobe Re <= 1/2, |z| >= 1 and the open
    mirror lobe Re > 1/2, |z - 1| > 1, both cut to the wedge
    Arg z < 2pi/3, Arg(z - 1) > pi/3.  The a = b classes sit on the arc
    |z| = 1 of the left lobe only; the mirror arc |z - 1| = 1 would repeat
    them and is excluded, as are the degenerate rays.
    """
    z = require_upper(z)
    ph0 = cmath.phase(z)
    ph1 = cmath.phase(z - 1.0)
    if abs(ph0 - TWO_PI_3) <= snap or abs(ph1 - PI_3) <= snap:
        return RegionMembership(False, RegionKind.EXCLUDED_RAY)
    if ph0 > TWO_PI_3 or ph1 < PI_3:
        return RegionMembership(False, RegionKind.OUTSIDE)
    re = z.real
    r0 = abs(z)
    r1 = abs(z - 1.0)
    on_line = abs(re - 0.5) <= snap
    on_arc0 = abs(r0 - 1.0) <= snap
    on_arc1 = abs(r1 - 1.0) <= snap
    if (re < 0.5 or on_line) and (r0 > 1.0 or on_arc0):
        if on_arc0:
            return RegionMembership(True, RegionKind.ARC_AB)
        if on_line:
            return RegionMembership(True, RegionKind.LINE_BC)
        return RegionMembership(True, RegionKind.INTERIOR)
    if re > 0.5 and not on_line and r1 > 1.0 and not on_arc1:
        return RegionMembership(True, RegionKind.INTERIOR)
    return RegionMembership(False, RegionKind.OUTSIDE)


def membership_unoriented(z: complex, snap: float = SNAP_TOL) -> RegionMembership:
    """Decide whether z is the marker of exactly one unoriented hexagon class.

    Region: Arg z < 2pi/3, |z| >= 1, Re z <= 1/2, boundaries included except
    the degenerate ray.  At the hexagonal corner the arc kind wins.
    """
    z = require_upper(z)
    ph0 = cmath.phase(z)
    if abs(ph0 - TWO_PI_3) <= snap:
        return RegionMembership(False, RegionKind.EXCLUDED_RAY)
    if ph0 > TWO_PI_3:
        return RegionMembership(False, RegionKind.OUTSIDE)
    re = z.real
    r0 = abs(z)
    on_line = abs(re - 0.5) <= snap
    on_arc0 = abs(r0 - 1.0) <= snap
    if (re < 0.5 or on_line) and (r0 > 1.0 or on_arc0):
        if on_arc0:
            return RegionMembership(True, RegionKind.ARC_AB)
        if on_line:
            return RegionMembership(True, RegionKind.LINE_BC)
        return RegionMembership(True, RegionKind.INTERIOR)
    return RegionMembership(False, RegionKind.OUTSIDE)


def edge_lengths_normalized(
    triple: HexTriple | tuple[float, float, float],
) -> tuple[float, float, float]:
    """Edge lengths of the spine on the unit-area torus, in triple order.

    Dividing by sqrt(area) leaves (a, b, c) / sqrt((sqrt(3)/2)(ab + bc + ca)),
    which is invariant under rescaling the triple.
    """
    if isinstance(triple, HexTriple):
        a, b, c = triple.as_tuple()
    else:
        a, b, c = HexTriple(*triple).as_tuple()
    den = math.sqrt((SQRT3 / 2.0) * (a * b + b * c + a * c))
    return (a / den, b / den, c / den)


def disc_model_transform(z: complex) -> complex:
    """Moebius map to the unit disc centered at the hexagonal point."""
    z = require_upper(z)
    return (2j * z + SQRT3 - 1j) / (2.0 * z - 1.0 + SQRT3 * 1j)
