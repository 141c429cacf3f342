"""Benchmark of the compiled kernels against the numpy fallback.

Times the two hot operations (scattered cell-polynomial evaluation and the
fixed-grid variant) and one full characteristic-tracing solver step on each
backend. Run as ``python benchmarks/bench_kernels.py``.
"""

import argparse
import time

import numpy as np

from activeflux import _kernels_py
from activeflux.basis import build_basis
from activeflux.method_b import method_b_run
from activeflux.scheme_core import advection
from activeflux.state import Mesh, project_initial

try:
    from activeflux import _kernels_cy
except ImportError:
    _kernels_cy = None


def timeit(fn, repeat, warmup=3):
    for _ in range(warmup):
        fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(M, N, n_points, repeat):
    rng = np.random.default_rng(0)
    coeffs = rng.standard_normal((M, N + 1))
    idx = rng.integers(0, M, size=n_points).astype(np.int64)
    xi = rng.uniform(-0.5, 0.5, size=n_points)
    nodes = np.linspace(-0.5, 0.5, N + 1)

    rows = []
    backends = [("numpy", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cython", _kernels_cy))
    for label, impl in backends:
        t_eval = timeit(lambda: impl.cell_poly_eval(coeffs, idx, xi), repeat)
        t_grid = timeit(lambda: impl.cell_poly_eval_grid(coeffs, nodes), repeat)
        rows.append((label, t_eval, t_grid))
    return rows


def bench_solver(M, N, repeat):
    basis = build_basis(N)
    mesh = Mesh(0.0, 1.0, M)
    state = project_initial(lambda x: 0.8 + np.exp(-((x - 0.5) / 0.05) ** 2),
                            mesh, basis)
    flux = advection(1.0)
    return timeit(lambda: method_b_run(state, basis, flux, 0.5, 20.0 / M), repeat)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cells", type=int, default=256)
    ap.add_argument("--degree", type=int, default=5)
    ap.add_argument("--points", type=int, default=4096)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()

    print(f"kernels: M={args.cells} cells, degree N={args.degree}, "
          f"{args.points} scattered points (best of {args.repeat})")
    rows = bench_kernels(args.cells, args.degree, args.points, args.repeat)
    base = rows[0][1], rows[0][2]
    print(f"{'backend':<8} {'cell_poly_eval':>16} {'cell_poly_eval_grid':>20} "
          f"{'speedup':>9}")
    for label, t_eval, t_grid in rows:
        print(f"{label:<8} {t_eval * 1e6:>13.1f} us {t_grid * 1e6:>17.1f} us "
              f"{base[0] / t_eval:>8.2f}x")

    from activeflux.kernels import BACKEND
    t = bench_solver(args.cells, args.degree, max(3, args.repeat // 20))
    print(f"\nfull characteristics-method run (20 steps, {BACKEND} backend): "
          f"{t * 1e3:.1f} ms")


if __name__ == "__main__":
    main()
