"""Pure-Python kernel: batched Fermat point of three anchors.

Reference implementation of the hot loop used by the brute-force spine
oracle.  Minimizes f(w) = sum_i |w - q_i| for each row of anchors by damped
Weiszfeld iteration, switching to a safeguarded Newton step once the
gradient is small.  Callers must pre-filter triangles with an angle of
2pi/3 or more, whose minimizer sits on a vertex.
"""

import math

import numpy as np

VERTEX_EPS = 1e-13
NEWTON_GATE = 1e-2

BACKEND_NAME = "python"


def relax_one(ax, ay, bx, by, cx, cy, tol=1e-12, max_iter=10000):
    """Minimize |w-a| + |w-b| + |w-c| over w in the plane.

    Returns (wx, wy, total, residual, iterations).  The residual is the
    norm of the summed unit vectors from the anchors, which vanishes at the
    interior optimum.
    """
    wx = (ax + bx + cx) / 3.0
    wy = (ay + by + cy) / 3.0
    res = math.inf
    d1 = d2 = d3 = 0.0
    iters = 0
    for iters in range(1, max_iter + 1):
        d1 = math.hypot(wx - ax, wy - ay)
        d2 = math.hypot(wx - bx, wy - by)
        d3 = math.hypot(wx - cx, wy - cy)
        if d1 < VERTEX_EPS or d2 < VERTEX_EPS or d3 < VERTEX_EPS:
            # damp halfway off the vertex singularity and retry
            if d1 <= d2 and d1 <= d3:
                wx, wy = 0.5 * (wx + ax) + VERTEX_EPS, 0.5 * (wy + ay) + VERTEX_EPS
            elif d2 <= d3:
                wx, wy = 0.5 * (wx + bx) + VERTEX_EPS, 0.5 * (wy + by) + VERTEX_EPS
            else:
                wx, wy = 0.5 * (wx + cx) + VERTEX_EPS, 0.5 * (wy + cy) + VERTEX_EPS
            continue
        u1x, u1y = (wx - ax) / d1, (wy - ay) / d1
        u2x, u2y = (wx - bx) / d2, (wy - by) / d2
        u3x, u3y = (wx - cx) / d3, (wy - cy) / d3
        gx = u1x + u2x + u3x
        gy = u1y + u2y + u3y
        res = math.hypot(gx, gy)
        if res <= tol:
            break
        if res < NEWTON_GATE:
            # H = sum (I - u u^T) / d, positive definite off collinear anchors
            hxx = (1.0 - u1x * u1x) / d1 + (1.0 - u2x * u2x) / d2 + (1.0 - u3x * u3x) / d3
            hyy = (1.0 - u1y * u1y) / d1 + (1.0 - u2y * u2y) / d2 + (1.0 - u3y * u3y) / d3
            hxy = -(u1x * u1y / d1 + u2x * u2y / d2 + u3x * u3y / d3)
            det = hxx * hyy - hxy * hxy
            if det > 0.0:
                sx = (hyy * gx - hxy * gy) / det
                sy = (hxx * gy - hxy * gx) / det
                if math.hypot(sx, sy) <= 1e-15 * (1.0 + math.hypot(wx, wy)):
                    break  # step below double resolution, cannot improve
                # accept within a few ulps of f0: near the optimum the true
                # decrease drops under rounding noise
                f_cap = (d1 + d2 + d3) * (1.0 + 5e-16)
                accepted = False
                for _ in range(30):
                    nx, ny = wx - sx, wy - sy
                    e1 = math.hypot(nx - ax, ny - ay)
                    e2 = math.hypot(nx - bx, ny - by)
                    e3 = math.hypot(nx - cx, ny - cy)
                    if e1 + e2 + e3 <= f_cap and min(e1, e2, e3) > VERTEX_EPS:
                        wx, wy = nx, ny
                        accepted = True
                        break
                    sx *= 0.5
                    sy *= 0.5
                if accepted:
                    continue
        inv = 1.0 / d1 + 1.0 / d2 + 1.0 / d3
        wx = (ax / d1 + bx / d2 + cx / d3) / inv
        wy = (ay / d1 + by / d2 + cy / d3) / inv
    return wx, wy, d1 + d2 + d3, res, iters


def fermat_relax_batch(anchors, tol=1e-12, max_iter=10000):
    """Relax every row of anchors, shaped (n, 3, 2).

    Returns arrays (w, total, residual, iterations) with shapes
    (n, 2), (n,), (n,), (n,).
    """
    q = np.ascontiguousarray(anchors, dtype=np.float64)
    if q.ndim != 3 or q.shape[1:] != (3, 2):
        raise ValueError(f"anchors must have shape (n, 3, 2), got {q.shape}")
    n = q.shape[0]
    w = np.empty((n, 2))
    total = np.empty(n)
    residual = np.empty(n)
    iterations = np.empty(n, dtype=np.int64)
    for i in range(n):
        wx, wy, f, res, its = relax_one(
            q[i, 0, 0], q[i, 0, 1], q[i, 1, 0], q[i, 1, 1], q[i, 2, 0], q[i, 2, 1],
            tol=tol, max_iter=max_iter,
        )
        w[i, 0], w[i, 1] = wx, wy
        total[i] = f
        residual[i] = res
        iterations[i] = its
    return w, total, residual, iterations
