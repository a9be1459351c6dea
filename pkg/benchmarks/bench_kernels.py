#!/usr/bin/env python3
"""Benchmark the compiled Fermat-relaxation kernel against the pure-Python one.

Two scenarios:
  * raw kernel throughput on synthetic anchor batches,
  * end-to-end oracle verification of random tori.

Run after `pip install -e . --no-build-isolation`; without the compiled
extension only the python backend is timed.
"""

import argparse
import time

import numpy as np

from spinelab import _fermat_py
from spinelab.cli import sample_reduced_tori

try:
    from spinelab import _fermat

    BACKENDS = {"python": _fermat_py, "compiled": _fermat}
except ImportError:
    BACKENDS = {"python": _fermat_py}


def synthetic_batch(n, seed=0):
    rng = np.random.default_rng(seed)
    # anchors of unimodular offset triples on random reduced tori
    rows = []
    while len(rows) < n:
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.9, 2.5))
        if abs(tau) < 1.0:
            continue
        m2, n2, m3 = rng.integers(-3, 4, size=3)
        n3 = (1 + m3 * n2) // m2 if m2 != 0 else rng.integers(-3, 4)
        offs = [(0, 0), (int(m2), int(n2)), (int(m3), int(n3))]
        anchors = [(-(m + k * tau.real), -(k * tau.imag)) for m, k in offs]
        # keep interior-optimum rows only
        ok = True
        for i in range(3):
            px, py = anchors[i]
            qx, qy = anchors[(i + 1) % 3]
            rx, ry = anchors[(i + 2) % 3]
            ux, uy, vx, vy = qx - px, qy - py, rx - px, ry - py
            nu = (ux * ux + uy * uy) ** 0.5
            nv = (vx * vx + vy * vy) ** 0.5
            if nu < 1e-9 or nv < 1e-9 or (ux * vx + uy * vy) / (nu * nv) <= -0.5:
                ok = False
                break
        if ok:
            rows.append(anchors)
    return np.array(rows)


def bench_kernel(sizes, repeats):
    print("== raw kernel: batched Fermat relaxation ==")
    header = f"{'n':>8}" + "".join(f"{name:>16}" for name in BACKENDS)
    print(header + f"{'speedup':>12}" if len(BACKENDS) == 2 else header)
    for n in sizes:
        batch = synthetic_batch(n)
        times = {}
        for name, mod in BACKENDS.items():
            best = float("inf")
            for _ in range(repeats):
                t0 = time.perf_counter()
                w, total, res, iters = mod.fermat_relax_batch(batch)
                best = min(best, time.perf_counter() - t0)
            times[name] = best
            assert res.max() < 1e-10, "kernel failed to converge"
        line = f"{n:>8}" + "".join(f"{times[name] * 1e3:>13.2f} ms" for name in BACKENDS)
        if len(times) == 2:
            line += f"{times['python'] / times['compiled']:>11.1f}x"
        print(line)


def bench_oracle(trials, seed):
    from spinelab import kernels, oracle

    print(f"\n== end to end: oracle verification of {trials} random tori ==")
    tori = sample_reduced_tori(trials, seed)
    for name, mod in BACKENDS.items():
        kernels._impl = mod
        kernels.fermat_relax_batch = mod.fermat_relax_batch
        kernels.relax_one = mod.relax_one
        t0 = time.perf_counter()
        ok = all(oracle.compare_with_analytic(z).matched for z in tori)
        dt = time.perf_counter() - t0
        print(f"{name:>10}: {dt * 1e3:10.1f} ms   all matched: {ok}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 1000, 10000])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--trials", type=int, default=10)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    print(f"available backends: {', '.join(BACKENDS)}")
    bench_kernel(args.sizes, args.repeats)
    bench_oracle(args.trials, args.seed)


if __name__ == "__main__":
    main()
