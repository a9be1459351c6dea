"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance is fixed here, nothing is calibrated at runtime.
"""

import math
import time

import numpy as np
import pytest

import spinelab.hyperbolic as hyp
from spinelab.cli import main, sample_reduced_tori
from spinelab.halfplane import HEXAGONAL_POINT, SQRT3
from spinelab.hexagon import (
    TWO_PI_3,
    fermat_point,
    fermat_tripod,
    normalize_unoriented,
    tilde_p,
)
from spinelab.oracle import (
    ThetaEmbedding,
    compare_with_analytic,
    enumerate_minimal_spines_oracle,
)
from spinelab.spines import (
    count_oriented,
    count_unoriented,
    fiber_oriented,
    minimal_spines,
    systole_field,
)

GLOBAL_MIN = 3.0 ** 0.25 * math.sqrt(2.0)  # 1.861209718...

NAMED_TORI = (1j, HEXAGONAL_POINT, 2j, 0.35 + 2j)
RANDOM_SEED = 7
RANDOM_TRIALS = 20


def acceptance_tori():
    return list(NAMED_TORI) + sample_reduced_tori(RANDOM_TRIALS, RANDOM_SEED)


def test_criterion_1_systole_grid_minimum():
    start = time.perf_counter()
    re = np.linspace(-0.5, 0.5, 400)
    im = np.linspace(SQRT3 / 2.0, 4.0, 400)
    field = systole_field(re, im)
    x, y = np.meshgrid(re, im)
    inside = (x * x + y * y >= 1.0 - 1e-12) & (x > -0.5)
    masked = np.where(inside, field, np.inf)
    flat = int(np.argmin(masked))
    i, j = divmod(flat, len(re))
    argmin = complex(re[j], im[i])
    value = float(masked[i, j])
    elapsed = time.perf_counter() - start

    assert abs(argmin - HEXAGONAL_POINT) <= 1e-3
    assert abs(value - GLOBAL_MIN) <= 1e-9
    # uniqueness on the grid: every other node is strictly longer
    second = float(np.partition(masked[np.isfinite(masked)].ravel(), 1)[1])
    assert second > value
    assert elapsed < 5.0
    print(
        f"ACCEPTANCE 1: PASS - grid minimum {value:.12f} at "
        f"{argmin:.6f}, {elapsed:.2f} s"
    )


def test_criterion_2_counting_anchors():
    assert count_oriented(1j) == 1
    assert count_oriented(HEXAGONAL_POINT) == 1
    assert count_oriented(2j) == 4
    assert count_oriented(0.35 + 2j) == 3
    assert count_unoriented(2j) == 2
    print("ACCEPTANCE 2: PASS - counts (1, 1, 4, 3) and unoriented 2 exact")


def test_criterion_3_oracle_equivalence():
    start = time.perf_counter()
    tori = acceptance_tori()
    for z in tori:
        report = compare_with_analytic(z)
        assert report.matched, (z, report.detail)
        assert report.count == report.analytic_count
        assert report.max_length_error < 1e-6
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    print(
        f"ACCEPTANCE 3: PASS - oracle matched {len(tori)}/{len(tori)} tori "
        f"in {elapsed:.2f} s"
    )


def test_criterion_4_minimal_length_multiplicity():
    rng = np.random.default_rng(RANDOM_SEED)
    assert len(minimal_spines(1j, oriented=True)) == 1
    for _ in range(10):
        rect = complex(0.0, rng.uniform(1.05, 3.0))
        assert len(minimal_spines(rect, oriented=True)) == 2
        assert len(minimal_spines(rect, oriented=False)) == 1
    for _ in range(10):
        sign = -1.0 if rng.random() < 0.5 else 1.0
        generic = complex(sign * rng.uniform(0.01, 0.49), rng.uniform(1.2, 3.0))
        assert len(minimal_spines(generic, oriented=True)) == 1
        assert len(minimal_spines(generic, oriented=False)) == 1
    print("ACCEPTANCE 4: PASS - minimal multiplicity 2/1/1 as classified")


def test_criterion_5_round_trip_identities():
    rng = np.random.default_rng(51)
    worst_rt = worst_carnot = worst_angle = 0.0
    for _ in range(10_000):
        t = normalize_unoriented(*rng.uniform(0.05, 1.0, 3)).as_tuple()
        z = tilde_p(t)
        back = fermat_tripod(z)
        assert back is not None
        worst_rt = max(
            worst_rt, max(abs(u - v) for u, v in zip(back.as_tuple(), t))
        )
        a, b, c = t
        carnot = abs(
            abs(z) ** 2 - (a * a + c * c + a * c) / (b * b + c * c + b * c)
        )
        worst_carnot = max(worst_carnot, carnot)
        f = fermat_point(0j, 1 + 0j, z)
        legs = [0 - f, 1 - f, z - f]
        for i in range(3):
            u, v = legs[i], legs[(i + 1) % 3]
            dot = (u.real * v.real + u.imag * v.imag) / (abs(u) * abs(v))
            ang = math.acos(max(-1.0, min(1.0, dot)))
            worst_angle = max(worst_angle, abs(ang - TWO_PI_3))
    assert worst_rt <= 1e-10
    assert worst_carnot <= 1e-12
    assert worst_angle <= 1e-10
    print(
        f"ACCEPTANCE 5: PASS - round trip {worst_rt:.2e}, "
        f"carnot {worst_carnot:.2e}, angles {worst_angle:.2e}"
    )


def test_criterion_6_oracle_stationarity():
    worst_res = worst_angle = 0.0
    checked = 0
    for z in acceptance_tori():
        fiber = fiber_oriented(z)
        cap = max(s.total_length for s in fiber.spines) + 1e-3
        report = enumerate_minimal_spines_oracle(fiber.torus, cap)
        for cls in report.classes:
            checked += 1
            worst_res = max(worst_res, cls.residual)
            emb = ThetaEmbedding(tau=report.torus, w=cls.w, offsets=cls.offsets)
            vecs = emb.edge_vectors()
            for i in range(3):
                ux, uy = vecs[i]
                vx, vy = vecs[(i + 1) % 3]
                dot = (ux * vx + uy * vy) / (math.hypot(ux, uy) * math.hypot(vx, vy))
                ang = math.acos(max(-1.0, min(1.0, dot)))
                worst_angle = max(worst_angle, abs(ang - TWO_PI_3))
    assert worst_res < 1e-8
    assert worst_angle < 1e-6
    print(
        f"ACCEPTANCE 6: PASS - {checked} relaxed spines, residual "
        f"{worst_res:.2e}, junction angles off by {worst_angle:.2e}"
    )


def _random_hpoint(rng, spread=1.5):
    x1, x2 = rng.normal(0.0, spread, 2)
    return hyp.HPoint.from_xy(x1, x2)


def _line_point(base, direction, t):
    v = base.as_array() * math.cosh(t) + direction * math.sinh(t)
    n = math.sqrt(v[0] * v[0] - v[1] * v[1] - v[2] * v[2])
    return hyp.HPoint(v[0] / n, v[1] / n, v[2] / n)


def test_criterion_7_hyperbolic_convexity():
    rng = np.random.default_rng(52)
    worst = math.inf
    for _ in range(10_000):
        pts = [_random_hpoint(rng) for _ in range(4)]
        worst = min(worst, hyp.convexity_gap(*pts, rng.uniform(0.01, 0.99)))
    assert worst >= -1e-12

    collinear_worst = 0.0
    for _ in range(1000):
        p, q = _random_hpoint(rng), _random_hpoint(rng)
        u = q.as_array() + hyp.lorentz_dot(p, q) * p.as_array()
        u = u / math.sqrt(-u[0] * u[0] + u[1] * u[1] + u[2] * u[2])
        ty1, ty2 = rng.uniform(-1.5, 1.5, 2)
        c1, c2 = rng.uniform(0.05, 1.5, 2)
        gap = hyp.convexity_gap(
            _line_point(p, u, ty1 + c1),
            _line_point(p, u, ty2 + c2),
            _line_point(p, u, ty1),
            _line_point(p, u, ty2),
            rng.uniform(0.1, 0.9),
        )
        collinear_worst = max(collinear_worst, abs(gap))
    assert collinear_worst < 1e-10

    generic_min = math.inf
    for _ in range(1000):
        pts = [_random_hpoint(rng) for _ in range(4)]
        generic_min = min(generic_min, hyp.convexity_gap(*pts, rng.uniform(0.1, 0.9)))
    assert generic_min > 1e-8
    print(
        f"ACCEPTANCE 7: PASS - gap >= {worst:.2e}, collinear "
        f"{collinear_worst:.2e}, generic min {generic_min:.2e}"
    )


def test_criterion_8_extremal_surfaces():
    prev = 0.0
    for g in range(2, 11):
        n = 12 * g - 6
        poly = hyp.regular_polygon(n, TWO_PI_3)  # construction certifies 1e-9
        assert abs(poly.area - (4 * g - 4) * math.pi) <= 1e-9
        expected_inradius = math.acosh(1.0 / (2.0 * math.sin(math.pi / n)))
        assert abs(poly.inradius - expected_inradius) <= 1e-12
        value = hyp.extremal_spine_systole(g)
        assert value > prev
        prev = value
    g2 = hyp.extremal_spine_systole(2)
    assert abs(g2 - 9.32) < 5e-3
    inradius2 = hyp.regular_polygon(18, TWO_PI_3).inradius
    print(
        f"ACCEPTANCE 8: PASS - polygons close for g=2..10; g=2 spine "
        f"{g2:.6f}, inradius {inradius2:.6f}"
    )


def test_criterion_9_byte_determinism(tmp_path, capsys):
    args = [
        "heatmap",
        "--re-min", "-0.5", "--re-max", "0.5",
        "--im-min", "0.85", "--im-max", "3.0",
        "--cols", "12", "--rows", "16",
        "--quantity", "count",
    ]
    outputs = []
    for tag in ("a", "b"):
        svg = tmp_path / f"{tag}.svg"
        csv = tmp_path / f"{tag}.csv"
        assert main(args + ["--svg", str(svg), "--csv", str(csv)]) == 0
        outputs.append((svg.read_bytes(), csv.read_bytes()))
    assert outputs[0] == outputs[1]

    runs = []
    for _ in range(2):
        assert main(["spines", "0.35+2i", "--csv"]) == 0
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1]
    print("ACCEPTANCE 9: PASS - heatmap and spines outputs byte-identical")
