import math

import numpy as np
import pytest

from spinelab.errors import InvalidGenusError, NotHyperbolicError
from spinelab.hyperbolic import (
    HPoint,
    convex_combination,
    convexity_gap,
    dist,
    extremal_spine_systole,
    geodesic_point,
    lorentz_dot,
    regular_polygon,
)

TWO_PI_3 = 2.0 * math.pi / 3.0


def random_point(rng, spread=1.5):
    x1, x2 = rng.normal(0.0, spread, 2)
    return HPoint.from_xy(x1, x2)


def point_on_line(base, direction, t):
    v = base.as_array() * math.cosh(t) + direction * math.sinh(t)
    n = math.sqrt(v[0] * v[0] - v[1] * v[1] - v[2] * v[2])
    return HPoint(v[0] / n, v[1] / n, v[2] / n)


def coords_close(p, q, tol=1e-12):
    return max(abs(p.x0 - q.x0), abs(p.x1 - q.x1), abs(p.x2 - q.x2)) < tol


def unit_tangent(p, q):
    u = q.as_array() + lorentz_dot(p, q) * p.as_array()
    return u / math.sqrt(-u[0] * u[0] + u[1] * u[1] + u[2] * u[2])


# ------------------------------------------------------------------ points


def test_hpoint_validation():
    HPoint(1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        HPoint(1.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        HPoint(-1.0, 0.0, 0.0)


def test_dist_identity_and_parametrized_geodesic():
    o = HPoint.origin()
    assert dist(o, o) == 0.0
    q = HPoint(math.cosh(1.0), math.sinh(1.0), 0.0)
    assert abs(dist(o, q) - 1.0) < 1e-15


def test_triangle_inequality():
    rng = np.random.default_rng(31)
    for _ in range(10_000):
        p, q, r = (random_point(rng) for _ in range(3))
        assert dist(p, r) <= dist(p, q) + dist(q, r) + 1e-12


# ------------------------------------------------------------ combinations


def test_convex_combination_endpoints():
    rng = np.random.default_rng(32)
    x1, x2 = random_point(rng), random_point(rng)
    e1 = convex_combination(1.0, x1, x2)
    assert coords_close(e1, x1)
    same = convex_combination(0.5, x1, x1)
    assert coords_close(same, x1)


def test_convex_combination_additivity():
    rng = np.random.default_rng(33)
    for _ in range(1000):
        x1, x2 = random_point(rng), random_point(rng)
        lam = rng.uniform(0.0, 1.0)
        c = convex_combination(lam, x1, x2)
        assert abs(dist(x1, c) + dist(c, x2) - dist(x1, x2)) < 1e-10


def test_combination_parametrizations_meet_at_midpoint():
    rng = np.random.default_rng(34)
    for _ in range(500):
        x1, x2 = random_point(rng), random_point(rng)
        a = convex_combination(0.5, x1, x2)
        b = geodesic_point(0.5, x1, x2)
        assert coords_close(a, b, 1e-10)


# ------------------------------------------------------------ convexity gap


def test_gap_zero_when_segments_share_a_line():
    rng = np.random.default_rng(35)
    for _ in range(1000):
        p, q = random_point(rng), random_point(rng)
        u = unit_tangent(p, q)
        ty1, ty2 = rng.uniform(-1.5, 1.5, 2)
        c1, c2 = rng.uniform(0.05, 1.5, 2)
        x1 = point_on_line(p, u, ty1 + c1)
        x2 = point_on_line(p, u, ty2 + c2)
        y1 = point_on_line(p, u, ty1)
        y2 = point_on_line(p, u, ty2)
        assert abs(convexity_gap(x1, x2, y1, y2, rng.uniform(0.1, 0.9))) < 1e-10


def test_gap_zero_for_coinciding_pairs():
    rng = np.random.default_rng(36)
    x1, x2 = random_point(rng), random_point(rng)
    assert abs(convexity_gap(x1, x2, x1, x2, 0.3)) < 1e-12


def test_gap_strictly_positive_generic():
    rng = np.random.default_rng(37)
    for _ in range(10_000):
        pts = [random_point(rng) for _ in range(4)]
        gap = convexity_gap(*pts, rng.uniform(0.01, 0.99))
        assert gap >= -1e-12


# ---------------------------------------------------------------- polygons


def test_regular_18gon_closed_forms():
    poly = regular_polygon(18, TWO_PI_3)
    assert abs(poly.area - 4.0 * math.pi) < 1e-12
    assert abs(poly.inradius - math.acosh(1.0 / (2.0 * math.sin(math.pi / 18)))) < 1e-15
    assert abs(poly.side - 1.0358861383423738) < 1e-12


def test_not_hyperbolic_raises():
    with pytest.raises(NotHyperbolicError):
        regular_polygon(3, TWO_PI_3)
    with pytest.raises(NotHyperbolicError):
        regular_polygon(6, TWO_PI_3)  # flat hexagon, zero area


def test_construction_detects_wrong_side():
    import spinelab.hyperbolic as hyp

    poly = regular_polygon(18, TWO_PI_3)
    with pytest.raises(AssertionError):
        hyp._verify_polygon(18, TWO_PI_3, poly.side * 1.001, poly.circumradius)


@pytest.mark.parametrize("g", range(2, 11))
def test_gauss_bonnet_for_spine_polygons(g):
    poly = regular_polygon(12 * g - 6, TWO_PI_3)
    assert abs(poly.area - (4 * g - 4) * math.pi) < 1e-9


# ---------------------------------------------------------------- extremal


def test_extremal_genus_two():
    value = extremal_spine_systole(2)
    assert abs(value - 9.322975245081366) < 1e-10
    assert abs(value - 9.32) < 5e-3
    poly = regular_polygon(18, TWO_PI_3)
    assert abs(value - poly.n * poly.side / 2.0) < 1e-12  # half the perimeter
    assert abs(poly.inradius - 1.7191071206150519) < 1e-12


def test_extremal_increasing_in_genus():
    values = [extremal_spine_systole(g) for g in range(2, 11)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_extremal_invalid_genus():
    with pytest.raises(InvalidGenusError):
        extremal_spine_systole(1)
