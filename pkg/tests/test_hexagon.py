import cmath
import math

import numpy as np
import pytest

from spinelab.errors import NonPositiveSideError
from spinelab.halfplane import HEXAGONAL_POINT, SQRT3
from spinelab.hexagon import (
    PI_3,
    TWO_PI_3,
    HexTriple,
    RegionKind,
    disc_model_transform,
    edge_lengths_normalized,
    fermat_point,
    fermat_tripod,
    membership_oriented,
    membership_unoriented,
    normalize_oriented,
    normalize_unoriented,
    tilde_p,
)

MIN_TOTAL = 3.0 ** 0.25 * math.sqrt(2.0)  # shortest spine of all, 1.8612...


def random_sorted_triple(rng):
    a, b, c = sorted(rng.uniform(0.05, 1.0, 3), reverse=True)
    s = a + b + c
    return (a / s, b / s, c / s)


# ---------------------------------------------------------------- triples


def test_normalize_unoriented_examples():
    assert normalize_unoriented(1, 1, 1).as_tuple() == (1 / 3, 1 / 3, 1 / 3)
    assert normalize_unoriented(1, 2, 1).as_tuple() == (0.5, 0.25, 0.25)
    assert normalize_unoriented(3, 4, 5).as_tuple() == (5 / 12, 4 / 12, 3 / 12)


def test_normalize_oriented_keeps_cyclic_order():
    assert normalize_oriented(1, 2, 1).as_tuple() == (0.5, 0.25, 0.25)
    # cyclic order is preserved, not sorted
    t = normalize_oriented(0.2, 0.5, 0.3)
    assert t.as_tuple() == (0.5, 0.3, 0.2)
    t = normalize_oriented(0.3, 0.5, 0.2)
    assert t.as_tuple() == (0.5, 0.2, 0.3)
    # tie on the maximum: lexicographically largest rotation
    t = normalize_oriented(2, 1, 2)
    assert t.as_tuple() == (0.4, 0.4, 0.2)


def test_non_positive_sides_rejected():
    with pytest.raises(NonPositiveSideError):
        normalize_unoriented(1.0, 0.0, 2.0)
    with pytest.raises(NonPositiveSideError):
        HexTriple(1.0, -0.1, 2.0)


# ---------------------------------------------------------------- the lift


def test_tilde_p_equilateral_is_hexagonal_point():
    assert abs(tilde_p((1 / 3, 1 / 3, 1 / 3)) - HEXAGONAL_POINT) < 1e-15


def test_tilde_p_scale_invariant():
    assert tilde_p((1, 1, 1)) == tilde_p((1 / 3, 1 / 3, 1 / 3))
    rng = np.random.default_rng(2)
    for _ in range(200):
        t = random_sorted_triple(rng)
        k = rng.uniform(0.1, 10.0)
        scaled = (k * t[0], k * t[1], k * t[2])
        assert abs(tilde_p(scaled) - tilde_p(t)) < 1e-13


def test_tilde_p_derived_point():
    z = tilde_p((0.5, 0.25, 0.25))
    assert abs(z - complex(0.5, 5 * SQRT3 / 6)) < 1e-15


def test_carnot_modulus_identity():
    rng = np.random.default_rng(3)
    for _ in range(10_000):
        a, b, c = normalize_oriented(*rng.uniform(0.05, 1.0, 3)).as_tuple()
        z = tilde_p((a, b, c))
        expected = (a * a + c * c + a * c) / (b * b + c * c + b * c)
        assert abs(abs(z) ** 2 - expected) < 1e-12


def test_swapping_b_and_c_mirrors_the_marker():
    rng = np.random.default_rng(4)
    for _ in range(500):
        a, b, c = random_sorted_triple(rng)
        z = tilde_p((a, b, c))
        zm = tilde_p((a, c, b))
        assert abs(zm - (1 - z.conjugate())) < 1e-12


# ---------------------------------------------------------------- fermat


def test_fermat_tripod_hexagonal():
    t = fermat_tripod(HEXAGONAL_POINT)
    assert max(abs(x - 1 / 3) for x in t.as_tuple()) < 1e-12


def test_fermat_tripod_derived_round_trip():
    t = fermat_tripod(complex(0.5, 5 * SQRT3 / 6))
    assert max(abs(x - y) for x, y in zip(t.as_tuple(), (0.5, 0.25, 0.25))) < 1e-12


def test_fermat_tripod_degenerate():
    assert fermat_tripod(-1 + 0.5j) is None
    assert fermat_tripod(cmath.exp(2j * math.pi / 3)) is None


def test_membership_and_degeneracy_snaps_are_consistent():
    # markers a hair inside the ray snap must be accepted by the Fermat
    # construction too, at any distance from the vertex
    for r in (0.9, 1.0, 2.0, 7.0):
        z = r * cmath.exp(1j * (TWO_PI_3 - 1.05e-12))
        assert fermat_tripod(z) is not None
        m = membership_oriented(z)
        if m.inside:
            assert fermat_tripod(z) is not None
    # within the snap band the region test reports the ray
    z = 2.0 * cmath.exp(1j * (TWO_PI_3 - 7e-13))
    assert membership_oriented(z).boundary is RegionKind.EXCLUDED_RAY


def test_round_trip_and_angles():
    rng = np.random.default_rng(5)
    for _ in range(2000):
        t = random_sorted_triple(rng)
        z = tilde_p(t)
        back = fermat_tripod(z)
        assert back is not None
        assert max(abs(x - y) for x, y in zip(back.as_tuple(), t)) < 1e-10
        f = fermat_point(0j, 1 + 0j, z)
        legs = [0 - f, 1 - f, z - f]
        for i in range(3):
            ang = abs(cmath.phase(legs[(i + 1) % 3] / legs[i]))
            assert abs(ang - TWO_PI_3) < 1e-10


# ---------------------------------------------------------------- regions


def test_membership_oriented_examples():
    m = membership_oriented(2j)
    assert m.inside and m.boundary is RegionKind.INTERIOR
    m = membership_oriented(1j)
    assert m.inside and m.boundary is RegionKind.ARC_AB
    m = membership_oriented(cmath.exp(2j * math.pi / 3))
    assert not m.inside and m.boundary is RegionKind.EXCLUDED_RAY


def test_membership_oriented_mirror_arc_excluded():
    # 1 + i lies on |z - 1| = 1 with Re > 1/2: same class as the arc point i
    m = membership_oriented(1 + 1j)
    assert not m.inside and m.boundary is RegionKind.OUTSIDE
    # strictly above that arc the mirror lobe is included
    assert membership_oriented(1 + 2j).inside


def test_membership_unoriented_examples():
    assert membership_unoriented(-1 + 2j).inside
    m = membership_unoriented(HEXAGONAL_POINT)
    assert m.inside and m.boundary is RegionKind.ARC_AB  # corner, arc kind wins
    m = membership_unoriented(1 + 2j)
    assert not m.inside and m.boundary is RegionKind.OUTSIDE


def test_membership_line_kind():
    m = membership_unoriented(0.5 + 2j)
    assert m.inside and m.boundary is RegionKind.LINE_BC
    m = membership_oriented(0.5 + 2j)
    assert m.inside and m.boundary is RegionKind.LINE_BC


def test_boundary_coherence_arc_means_a_equals_b():
    rng = np.random.default_rng(6)
    for _ in range(300):
        theta = rng.uniform(PI_3 + 1e-3, TWO_PI_3 - 1e-3)
        z = cmath.exp(1j * theta)
        t = fermat_tripod(z).as_tuple()
        assert abs(t[0] - t[1]) < 1e-10
        # converse: a = b triples land on the unit circle
        a, b, c = random_sorted_triple(rng)
        z = tilde_p((a, a, c))
        assert abs(abs(z) - 1.0) < 1e-12


def test_boundary_coherence_line_means_b_equals_c():
    rng = np.random.default_rng(7)
    for _ in range(300):
        z = complex(0.5, rng.uniform(0.87, 5.0))
        t = fermat_tripod(z).as_tuple()
        assert abs(t[1] - t[2]) < 1e-10
        a, b, c = random_sorted_triple(rng)
        z = tilde_p((a, b, b))
        assert abs(z.real - 0.5) < 1e-12


def test_membership_unoriented_iff_sorted_tripod():
    rng = np.random.default_rng(8)
    hits = 0
    for _ in range(3000):
        z = complex(rng.uniform(-2.0, 3.0), rng.uniform(0.05, 3.0))
        t = fermat_tripod(z)
        inside = membership_unoriented(z).inside
        if inside:
            hits += 1
            assert t is not None
            a, b, c = t.as_tuple()
            assert a >= b - 1e-12 and b >= c - 1e-12
        elif t is not None:
            a, b, c = t.as_tuple()
            # strictly sorted triples may only come from member points
            assert not (a > b + 1e-9 and b > c + 1e-9)
    assert hits > 100  # the sample actually exercised the region


# ---------------------------------------------------------------- lengths


def test_edge_lengths_equilateral():
    l1, l2, l3 = edge_lengths_normalized((1 / 3, 1 / 3, 1 / 3))
    assert abs(l1 - l2) < 1e-15 and abs(l2 - l3) < 1e-15
    assert abs(l1 + l2 + l3 - MIN_TOTAL) < 1e-12
    assert abs(l1 - 0.62040) < 1e-4


def test_edge_lengths_derived_total():
    total = sum(edge_lengths_normalized((0.5, 0.25, 0.25)))
    assert abs(total - 1.9222491313078036) < 1e-12
    assert abs(total - 1.92225) < 1e-4


def test_edge_lengths_scale_invariant():
    rng = np.random.default_rng(9)
    for _ in range(200):
        t = random_sorted_triple(rng)
        k = rng.uniform(0.1, 10.0)
        a = edge_lengths_normalized(t)
        b = edge_lengths_normalized((k * t[0], k * t[1], k * t[2]))
        assert max(abs(x - y) for x, y in zip(a, b)) < 1e-12


# ---------------------------------------------------------------- disc model


def test_disc_model_centers_hexagonal_point():
    assert abs(disc_model_transform(HEXAGONAL_POINT)) < 1e-15


def test_disc_model_maps_into_disc():
    assert abs(disc_model_transform(1j)) < 1.0
    rng = np.random.default_rng(10)
    for _ in range(1000):
        z = complex(rng.uniform(-5.0, 5.0), rng.uniform(1e-3, 10.0))
        assert abs(disc_model_transform(z)) < 1.0
