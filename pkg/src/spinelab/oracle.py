"""Brute-force verification of the spine classification by convex optimization.

A theta graph on the torus C / (Z + tau Z) with junction displacement w
travels the three lattice classes o_i = (m_i, n_i), so its edges are the
segments w + m_i + n_i tau and its total length is

    f(w) = sum_i |w + m_i + n_i tau|,

a convex sum of Euclidean norms.  The graph is a spine (complement one
disc) exactly when the two independent offset differences form a lattice
basis, i.e. when det[[m2, n2], [m3, n3]] = +-1 once o_1 = (0, 0).  Each
admissible class is relaxed to its unique length minimizer, which is the
Fermat point of the three anchor points -(m_i + n_i tau); at the minimum
the three unit edge vectors sum to zero, forcing the 2pi/3 junction angles.

Enumeration is complete by a side-length argument: each pairwise anchor
distance is at most the total length, so a class below the cap has all
offset vectors inside the disc of radius cap * sqrt(Im tau).  Classes are
deduplicated under common lattice translations, relabelings of the two
junctions (global negation) and the finite group of lattice-preserving
rotations, so that tori with extra symmetry (square, hexagonal) count each
spine once.  The dedup group is found by brute force on the Gram matrix.

This route shares nothing with the closed forms in `hexagon` and `spines`,
which is the point: `compare_with_analytic` confronts the two pipelines.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import CapTooSmallError, DegenerateMinimumError
from .halfplane import reduce_to_fundamental_domain
from .spines import FiberResult, fiber_oriented

Offsets = tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

#: Stationarity requirement on every reported class.
RESIDUAL_TOL = 1e-8
#: Kernel convergence target for the gradient norm.
RELAX_TOL = 1e-12
RELAX_MAX_ITER = 10000

_DEGENERATE_COS = -0.5 + 1e-12


@dataclass(frozen=True)
class ThetaEmbedding:
    """A concrete theta graph: lattice, junction displacement, edge classes."""

    tau: complex
    w: tuple[float, float]
    offsets: Offsets

    def __post_init__(self):
        if self.offsets[0] != (0, 0):
            raise ValueError("first offset must be (0, 0)")
        if not is_spine_type(self.offsets):
            raise ValueError(f"offsets {self.offsets} do not cut the torus to a disc")

    def edge_vectors(self) -> list[tuple[float, float]]:
        wx, wy = self.w
        return [
            (wx + m + n * self.tau.real, wy + n * self.tau.imag)
            for m, n in self.offsets
        ]


@dataclass(frozen=True)
class OracleClass:
    """One relaxed spine class."""

    length: float
    offsets: Offsets
    w: tuple[float, float]
    residual: float
    edge_lengths: tuple[float, float, float]


@dataclass
class OracleReport:
    torus: complex
    classes: list[OracleClass] = field(default_factory=list)
    matched: bool = True
    max_length_error: float = 0.0
    analytic_count: int | None = None
    detail: str = ""

    @property
    def count(self) -> int:
        return len(self.classes)


def is_spine_type(offsets) -> bool:
    """True when cutting along the theta graph leaves a single hexagon."""
    (m1, n1), (m2, n2), (m3, n3) = offsets
    if (m1, n1) != (0, 0):
        raise ValueError("first offset must be (0, 0)")
    return m2 * n3 - m3 * n2 in (1, -1)


def lattice_isometries(tau: complex, tol: float = 1e-9) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Integer rotations of the lattice Z + tau Z, as matrices on (m, n).

    Brute-forces M in SL(2, Z) with M^T G M = G for the Gram matrix G of
    the basis (1, tau).  Generic lattices give {I, -I}; the square lattice
    has order 4 and the hexagonal order 6.  A lattice within ~tol of a
    symmetric one is treated as having the larger group, matching the
    torus classification tolerance.
    """
    g11 = 1.0
    g12 = tau.real
    g22 = abs(tau) ** 2
    atol = tol * max(1.0, g22)
    out = []
    for p, q, r, s in itertools.product(range(-2, 3), repeat=4):
        if p * s - q * r != 1:
            continue
        # M^T G M with M = [[p, q], [r, s]]
        t11 = p * (g11 * p + g12 * r) + r * (g12 * p + g22 * r)
        t12 = p * (g11 * q + g12 * s) + r * (g12 * q + g22 * s)
        t22 = q * (g11 * q + g12 * s) + s * (g12 * q + g22 * s)
        if abs(t11 - g11) < atol and abs(t12 - g12) < atol and abs(t22 - g22) < atol:
            out.append(((p, q), (r, s)))
    return out


def canonical_offsets(offsets, group) -> Offsets:
    """Class key under translations, junction swap and lattice rotations.

    For every rotation in the group (which contains -I, the junction swap),
    the offset set is translated so its lexicographic minimum is (0, 0) and
    sorted; the smallest tuple over the group is the key.
    """
    best = None
    for (p, q), (r, s) in group:
        pts = [(p * m + q * n, r * m + s * n) for m, n in offsets]
        m0, n0 = min(pts)
        key = tuple(sorted((m - m0, n - n0) for m, n in pts))
        if best is None or key < best:
            best = key
    return best


def _anchors(tau: complex, offsets) -> list[tuple[float, float]]:
    return [(-(m + n * tau.real), -(n * tau.imag)) for m, n in offsets]


def _is_degenerate(anchors) -> bool:
    for i in range(3):
        px, py = anchors[i]
        qx, qy = anchors[(i + 1) % 3]
        rx, ry = anchors[(i + 2) % 3]
        ux, uy = qx - px, qy - py
        vx, vy = rx - px, ry - py
        cosang = (ux * vx + uy * vy) / math.sqrt((ux * ux + uy * uy) * (vx * vx + vy * vy))
        if cosang <= _DEGENERATE_COS:
            return True
    return False


def relax(tau: complex, offsets) -> tuple[tuple[float, float], float]:
    """Minimize the class length; returns (w*, normalized length).

    Raises DegenerateMinimumError when the minimizer collapses an edge
    (some anchor triangle angle reaches 2pi/3), which is the parallelogram
    limit rather than a spine.
    """
    offsets = tuple(tuple(o) for o in offsets)
    if not is_spine_type(offsets):
        raise ValueError(f"offsets {offsets} do not define a spine")
    anchors = _anchors(tau, offsets)
    if _is_degenerate(anchors):
        raise DegenerateMinimumError(
            f"offsets {offsets} on tau={tau} relax to a collapsed edge"
        )
    wx, wy, total, res, _ = kernels.relax_one(
        *anchors[0], *anchors[1], *anchors[2], tol=RELAX_TOL, max_iter=RELAX_MAX_ITER
    )
    return (wx, wy), total / math.sqrt(tau.imag)


def stationarity_residual(tau: complex, offsets, w) -> float:
    """Norm of the summed unit edge vectors at one junction."""
    emb = ThetaEmbedding(tau=tau, w=(w[0], w[1]), offsets=tuple(tuple(o) for o in offsets))
    sx = sy = 0.0
    for ex, ey in emb.edge_vectors():
        d = math.hypot(ex, ey)
        if d == 0.0:
            raise ValueError("zero edge vector, residual undefined")
        sx += ex / d
        sy += ey / d
    return math.hypot(sx, sy)


def _required_bounds(tau: complex, cap_plane: float) -> tuple[int, int]:
    n_bound = math.floor(cap_plane / tau.imag)
    m_bound = math.floor(cap_plane + abs(tau.real) * n_bound)
    return m_bound, n_bound


def enumerate_minimal_spines_oracle(
    tau: complex, length_cap: float, coeff_bound: int | None = None
) -> OracleReport:
    """All spine classes of normalized length <= length_cap, by relaxation.

    The scan is certified complete: every edge class of such a spine has a
    plane vector no longer than length_cap * sqrt(Im tau), and the integer
    box implied by that disc is derived from the cap.  A caller-supplied
    coeff_bound below the derived requirement raises CapTooSmallError.
    """
    tau = reduce_to_fundamental_domain(tau).z0
    y = tau.imag
    cap_plane = length_cap * math.sqrt(y)
    m_bound, n_bound = _required_bounds(tau, cap_plane)
    if coeff_bound is not None:
        if coeff_bound < max(m_bound, n_bound):
            raise CapTooSmallError(
                f"coeff_bound={coeff_bound} cannot cover the disc of plane radius "
                f"{cap_plane:.6g} (needs |m| <= {m_bound}, |n| <= {n_bound})"
            )
        m_bound = n_bound = coeff_bound
    e2x, e2y = tau.real, y
    cap2 = cap_plane * cap_plane

    # integer vectors inside the disc |m + n tau| <= cap_plane
    disc = []
    for n in range(-n_bound, n_bound + 1):
        for m in range(-m_bound, m_bound + 1):
            vx, vy = m + n * e2x, n * e2y
            if vx * vx + vy * vy <= cap2:
                disc.append((m, n, vx, vy))

    group = lattice_isometries(tau)
    seen: set[Offsets] = set()
    pending: list[Offsets] = []
    anchor_rows: list[list[tuple[float, float]]] = []
    for m2, n2, v2x, v2y in disc:
        for m3, n3, v3x, v3y in disc:
            if m2 * n3 - m3 * n2 not in (1, -1):
                continue
            dx, dy = v2x - v3x, v2y - v3y
            if dx * dx + dy * dy > cap2:
                continue
            offsets: Offsets = ((0, 0), (m2, n2), (m3, n3))
            key = canonical_offsets(offsets, group)
            if key in seen:
                continue
            seen.add(key)
            anchors = _anchors(tau, offsets)
            if _is_degenerate(anchors):
                continue
            pending.append(offsets)
            anchor_rows.append(anchors)

    classes: list[OracleClass] = []
    if pending:
        w, total, residual, _ = kernels.fermat_relax_batch(
            np.array(anchor_rows), tol=RELAX_TOL, max_iter=RELAX_MAX_ITER
        )
        sqrt_y = math.sqrt(y)
        for i, offsets in enumerate(pending):
            norm_len = float(total[i]) / sqrt_y
            if norm_len > length_cap:
                continue
            if residual[i] >= RESIDUAL_TOL:
                raise RuntimeError(
                    f"relaxation of {offsets} on tau={tau} stalled at "
                    f"residual {residual[i]:.3e}"
                )
            edges = tuple(
                sorted(
                    (
                        math.hypot(w[i, 0] - ax, w[i, 1] - ay) / sqrt_y
                        for ax, ay in anchor_rows[i]
                    ),
                    reverse=True,
                )
            )
            classes.append(
                OracleClass(
                    length=norm_len,
                    offsets=offsets,
                    w=(float(w[i, 0]), float(w[i, 1])),
                    residual=float(residual[i]),
                    edge_lengths=edges,
                )
            )
    classes.sort(key=lambda c: (c.length, c.edge_lengths))
    return OracleReport(torus=tau, classes=classes)


def compare_with_analytic(tau: complex) -> OracleReport:
    """Confront the relaxation oracle with the closed-form fiber.

    Counts must agree exactly; sorted totals and per-edge lengths must agree
    within 1e-6.  Mismatches are reported in the result, not raised.

    One caveat: the closed-form side snaps markers within 1e-12 onto the
    region boundaries, so a torus whose marker sits inside that snap band
    (for instance |tau| within 1e-12 of 1, which happens a quadratic
    ~1e-6 off the square point) is counted as the boundary stratum, while
    the oracle resolves the nearly coincident classes separately.  Such
    tori report an honest count mismatch.
    """
    tau = reduce_to_fundamental_domain(tau).z0
    fiber: FiberResult = fiber_oriented(tau)
    analytic = sorted(
        (s.total_length, tuple(sorted(s.edge_lengths, reverse=True)))
        for s in fiber.spines
    )
    cap = analytic[-1][0] + 1e-3
    report = enumerate_minimal_spines_oracle(tau, cap)
    report.analytic_count = fiber.count
    if report.count != fiber.count:
        report.matched = False
        report.max_length_error = math.inf
        report.detail = (
            f"count mismatch: analytic {fiber.count}, oracle {report.count}"
        )
        return report
    err = 0.0
    for (la, ea), oc in zip(analytic, report.classes):
        err = max(err, abs(la - oc.length))
        err = max(err, max(abs(x - y) for x, y in zip(ea, oc.edge_lengths)))
    report.max_length_error = err
    if err > 1e-6:
        report.matched = False
        report.detail = f"length mismatch: max error {err:.3e}"
    return report
