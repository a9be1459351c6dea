# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: batched Fermat point of three anchors.

Same algorithm as spinelab._fermat_py, written as a tight C loop: damped
Weiszfeld iteration with a safeguarded Newton step once the gradient norm
drops below the gate.
"""

from libc.math cimport hypot, INFINITY

import numpy as np

DEF VERTEX_EPS = 1e-13
DEF NEWTON_GATE = 1e-2

BACKEND_NAME = "compiled"


cdef int _relax_one(double ax, double ay, double bx, double by,
                    double cx, double cy, double tol, int max_iter,
                    double* out) nogil:
    cdef double wx = (ax + bx + cx) / 3.0
    cdef double wy = (ay + by + cy) / 3.0
    cdef double d1 = 0.0, d2 = 0.0, d3 = 0.0
    cdef double u1x, u1y, u2x, u2y, u3x, u3y
    cdef double gx, gy, res = INFINITY
    cdef double hxx, hyy, hxy, det, sx, sy, f0, nx, ny, e1, e2, e3, inv
    cdef int iters = 0, k
    cdef bint accepted
    while iters < max_iter:
        iters += 1
        d1 = hypot(wx - ax, wy - ay)
        d2 = hypot(wx - bx, wy - by)
        d3 = hypot(wx - cx, wy - cy)
        if d1 < VERTEX_EPS or d2 < VERTEX_EPS or d3 < VERTEX_EPS:
            if d1 <= d2 and d1 <= d3:
                wx = 0.5 * (wx + ax) + VERTEX_EPS
                wy = 0.5 * (wy + ay) + VERTEX_EPS
            elif d2 <= d3:
                wx = 0.5 * (wx + bx) + VERTEX_EPS
                wy = 0.5 * (wy + by) + VERTEX_EPS
            else:
                wx = 0.5 * (wx + cx) + VERTEX_EPS
                wy = 0.5 * (wy + cy) + VERTEX_EPS
            continue
        u1x = (wx - ax) / d1; u1y = (wy - ay) / d1
        u2x = (wx - bx) / d2; u2y = (wy - by) / d2
        u3x = (wx - cx) / d3; u3y = (wy - cy) / d3
        gx = u1x + u2x + u3x
        gy = u1y + u2y + u3y
        res = hypot(gx, gy)
        if res <= tol:
            break
        if res < NEWTON_GATE:
            hxx = (1.0 - u1x * u1x) / d1 + (1.0 - u2x * u2x) / d2 + (1.0 - u3x * u3x) / d3
            hyy = (1.0 - u1y * u1y) / d1 + (1.0 - u2y * u2y) / d2 + (1.0 - u3y * u3y) / d3
            hxy = -(u1x * u1y / d1 + u2x * u2y / d2 + u3x * u3y / d3)
            det = hxx * hyy - hxy * hxy
            if det > 0.0:
                sx = (hyy * gx - hxy * gy) / det
                sy = (hxx * gy - hxy * gx) / det
                if hypot(sx, sy) <= 1e-15 * (1.0 + hypot(wx, wy)):
                    break  # step below double resolution, cannot improve
                # accept within a few ulps of f0: near the optimum the true
                # decrease drops under rounding noise
                f0 = (d1 + d2 + d3) * (1.0 + 5e-16)
                accepted = False
                for k in range(30):
                    nx = wx - sx
                    ny = wy - sy
                    e1 = hypot(nx - ax, ny - ay)
                    e2 = hypot(nx - bx, ny - by)
                    e3 = hypot(nx - cx, ny - cy)
                    if (e1 + e2 + e3 <= f0 and e1 > VERTEX_EPS
                            and e2 > VERTEX_EPS and e3 > VERTEX_EPS):
                        wx = nx
                        wy = ny
                        accepted = True
                        break
                    sx *= 0.5
                    sy *= 0.5
                if accepted:
                    continue
        inv = 1.0 / d1 + 1.0 / d2 + 1.0 / d3
        wx = (ax / d1 + bx / d2 + cx / d3) / inv
        wy = (ay / d1 + by / d2 + cy / d3) / inv
    out[0] = wx
    out[1] = wy
    out[2] = d1 + d2 + d3
    out[3] = res
    return iters


def relax_one(double ax, double ay, double bx, double by, double cx, double cy,
              double tol=1e-12, int max_iter=10000):
    """Single-triangle entry point mirroring the pure-Python signature."""
    cdef double out[4]
    cdef int iters = _relax_one(ax, ay, bx, by, cx, cy, tol, max_iter, out)
    return out[0], out[1], out[2], out[3], iters


def fermat_relax_batch(anchors, double tol=1e-12, int max_iter=10000):
    """Relax every row of anchors, shaped (n, 3, 2)."""
    q_arr = np.ascontiguousarray(anchors, dtype=np.float64)
    if q_arr.ndim != 3 or q_arr.shape[1] != 3 or q_arr.shape[2] != 2:
        raise ValueError(f"anchors must have shape (n, 3, 2), got {q_arr.shape}")
    cdef double[:, :, ::1] q = q_arr
    cdef Py_ssize_t n = q.shape[0]
    w_arr = np.empty((n, 2))
    total_arr = np.empty(n)
    residual_arr = np.empty(n)
    iter_arr = np.empty(n, dtype=np.int64)
    cdef double[:, ::1] w = w_arr
    cdef double[::1] total = total_arr
    cdef double[::1] residual = residual_arr
    cdef long long[::1] iterations = iter_arr
    cdef double out[4]
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            iterations[i] = _relax_one(q[i, 0, 0], q[i, 0, 1], q[i, 1, 0],
                                       q[i, 1, 1], q[i, 2, 0], q[i, 2, 1],
                                       tol, max_iter, out)
            w[i, 0] = out[0]
            w[i, 1] = out[1]
            total[i] = out[2]
            residual[i] = out[3]
    return w_arr, total_arr, residual_arr, iter_arr
