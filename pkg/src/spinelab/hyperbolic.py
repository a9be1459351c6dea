"""Hyperboloid-model kernel and extremal quantities for genus g >= 2.

Points of the hyperbolic plane are vectors x in R^3 with Lorentzian norm
<x, x> = -x0^2 + x1^2 + x2^2 = -1 and x0 > 0; the distance is
d(p, q) = arccosh(-<p, q>).

A shortest spine of a genus-g hyperbolic surface has 6g - 3 edges; cutting
along it unfolds the surface onto a polygon with 12g - 6 sides and all
interior angles 2pi/3, whose perimeter is twice the spine length.  Among
such polygons the regular one minimizes the perimeter, so the extremal
value comes from right-triangle trigonometry on the regular n-gon with
vertex angle beta:

    cosh(side / 2)  = cos(pi / n) / sin(beta / 2)
    cosh(inradius)  = cos(beta / 2) / sin(pi / n)
    area            = (n - 2) pi - n beta.

Those identities are certified here by explicit construction: the vertex at
circumradius distance from the center is rotated n times and the resulting
polygon must close with the prescribed side lengths and angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidGenusError, NotHyperbolicError

#: Construction tolerance for the polygon closure certificate.
CLOSURE_TOL = 1e-9


@dataclass(frozen=True)
class HPoint:
    """A point on the upper sheet of the unit hyperboloid."""

    x0: float
    x1: float
    x2: float

    def __post_init__(self):
        if self.x0 <= 0.0:
            raise ValueError("hyperboloid points need x0 > 0")
        norm = -self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2
        if abs(norm + 1.0) > 1e-12:
            raise ValueError(f"Lorentzian norm is {norm}, expected -1")

    @staticmethod
    def from_xy(x1: float, x2: float) -> "HPoint":
        return HPoint(math.sqrt(1.0 + x1 * x1 + x2 * x2), x1, x2)

    @staticmethod
    def origin() -> "HPoint":
        return HPoint(1.0, 0.0, 0.0)

    def as_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2])


def lorentz_dot(p: HPoint, q: HPoint) -> float:
    return -p.x0 * q.x0 + p.x1 * q.x1 + p.x2 * q.x2


def dist(p: HPoint, q: HPoint) -> float:
    """Hyperbolic distance; the inner product is clamped against rounding.

    Coinciding points short-circuit to zero: arccosh amplifies one-ulp
    rounding of the inner product into ~1e-8.
    """
    if p.x0 == q.x0 and p.x1 == q.x1 and p.x2 == q.x2:
        return 0.0
    return math.acosh(max(1.0, -lorentz_dot(p, q)))


def convex_combination(lam: float, x1: HPoint, x2: HPoint) -> HPoint:
    """Normalized Lorentzian combination (lam x1 + (1-lam) x2) / ||.||.

    Traces the geodesic segment from x2 (lam = 0) to x1 (lam = 1); hits the
    midpoint at lam = 1/2 but is not a constant-speed parametrization.
    """
    v = lam * x1.as_array() + (1.0 - lam) * x2.as_array()
    norm2 = v[0] * v[0] - v[1] * v[1] - v[2] * v[2]
    n = math.sqrt(norm2)
    return HPoint(v[0] / n, v[1] / n, v[2] / n)


def geodesic_point(lam: float, x1: HPoint, x2: HPoint) -> HPoint:
    """Point at arclength fraction lam of the way from x2 to x1."""
    total = dist(x2, x1)
    if total < 1e-14:
        return x2
    u = x1.as_array() + lorentz_dot(x2, x1) * x2.as_array()
    u = u / math.sqrt(-u[0] * u[0] + u[1] * u[1] + u[2] * u[2])
    v = x2.as_array() * math.cosh(lam * total) + u * math.sinh(lam * total)
    # renormalize: for distant points the cosh terms drift off the sheet
    n = math.sqrt(v[0] * v[0] - v[1] * v[1] - v[2] * v[2])
    return HPoint(v[0] / n, v[1] / n, v[2] / n)


def convexity_gap(x1: HPoint, x2: HPoint, y1: HPoint, y2: HPoint, lam: float) -> float:
    """Slack of the joint convexity of the distance along two geodesics.

    Returns lam d(x1, y1) + (1 - lam) d(x2, y2) - d(x_lam, y_lam) where
    x_lam, y_lam interpolate at matching arclength fractions.  Nonnegative,
    and zero only when all four points share a geodesic (with the two
    segments consistently oriented along it).
    """
    xl = geodesic_point(lam, x1, x2)
    yl = geodesic_point(lam, y1, y2)
    return lam * dist(x1, y1) + (1.0 - lam) * dist(x2, y2) - dist(xl, yl)


@dataclass(frozen=True)
class RegularPolygonData:
    n: int
    interior_angle: float
    side: float
    inradius: float
    circumradius: float
    area: float


def _rotation(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def _tangent_toward(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    j = np.array([-1.0, 1.0, 1.0])
    u = q + float(p @ (j * q)) * p
    return u / math.sqrt(float(u @ (j * u)))


def _verify_polygon(n: int, beta: float, side: float, circumradius: float) -> None:
    """Rotate one vertex n times about the center; the loop must close and
    realize the claimed side lengths and interior angles."""
    j = np.array([-1.0, 1.0, 1.0])
    rot = _rotation(2.0 * math.pi / n)
    verts = [np.array([math.cosh(circumradius), math.sinh(circumradius), 0.0])]
    for _ in range(n):
        verts.append(rot @ verts[-1])
    closure = float(np.max(np.abs(verts[n] - verts[0])))
    if closure > CLOSURE_TOL:
        raise AssertionError(f"polygon failed to close: defect {closure:.3e}")
    for k in range(n):
        d = math.acosh(max(1.0, -float(verts[k] @ (j * verts[k + 1]))))
        if abs(d - side) > CLOSURE_TOL:
            raise AssertionError(f"side {k} has length {d}, expected {side}")
    for k in range(1, n + 1):
        t1 = _tangent_toward(verts[k % n], verts[k - 1])
        t2 = _tangent_toward(verts[k % n], verts[(k + 1) % n])
        ang = math.acos(max(-1.0, min(1.0, float(t1 @ (j * t2)))))
        if abs(ang - beta) > CLOSURE_TOL:
            raise AssertionError(f"vertex {k} has angle {ang}, expected {beta}")


def regular_polygon(n: int, beta: float, verify: bool = True) -> RegularPolygonData:
    """Regular hyperbolic n-gon with interior angles beta.

    Raises NotHyperbolicError when (n - 2) pi - n beta <= 0.  With verify
    (default) the closed forms are checked by explicit construction in the
    hyperboloid model to 1e-9.
    """
    if n < 3:
        raise ValueError("a polygon needs at least 3 sides")
    area = (n - 2) * math.pi - n * beta
    if area <= 0.0:
        raise NotHyperbolicError(
            f"no hyperbolic {n}-gon with angles {beta}: area would be {area}"
        )
    side = 2.0 * math.acosh(math.cos(math.pi / n) / math.sin(beta / 2.0))
    inradius = math.acosh(math.cos(beta / 2.0) / math.sin(math.pi / n))
    circumradius = math.acosh(math.cosh(side / 2.0) * math.cosh(inradius))
    if verify:
        _verify_polygon(n, beta, side, circumradius)
    return RegularPolygonData(
        n=n,
        interior_angle=beta,
        side=side,
        inradius=inradius,
        circumradius=circumradius,
        area=area,
    )


def extremal_spine_systole(g: int) -> float:
    """Minimum of the spine systole over genus-g hyperbolic surfaces.

    Half the perimeter of the regular (12g - 6)-gon with angles 2pi/3,
    attained exactly on the surfaces that contain a disc of the largest
    possible radius (that radius being the polygon inradius).
    """
    if g < 2:
        raise InvalidGenusError(f"genus must be >= 2, got {g}")
    poly = regular_polygon(12 * g - 6, 2.0 * math.pi / 3.0)
    return (6 * g - 3) * poly.side
