"""Compare the compiled core against the pure-Python fallback.

Usage: python benchmarks/bench_core.py [--size N] [--repeats R]
"""

import argparse
import time

import numpy as np

from rkhskit._core import _pycore

try:
    from rkhskit._core import _fastcore
except ImportError:
    _fastcore = None


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_jacobi(backend, m):
    def run():
        a = np.array(m, order="C")
        v = np.eye(m.shape[0], order="C")
        fro = float(np.sqrt(np.sum(m * m)))
        backend.jacobi_eigen(a, v, 1e-12, 100, fro)

    return run


def bench_kaczmarz(backend, a, b, order, norms2):
    def run():
        x = np.zeros(a.shape[1])
        backend.kaczmarz_run(a, b, x, order, norms2, 0.0)

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=60)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    m = rng.normal(size=(args.size, args.size))
    m = np.ascontiguousarray(m + m.T)

    a = np.ascontiguousarray(rng.normal(size=(200, 50)))
    b = a @ rng.normal(size=50)
    norms2 = np.einsum("ij,ij->i", a, a)
    order = np.ascontiguousarray(np.tile(np.arange(200), (50, 1)), dtype=np.int64)

    backends = [("python", _pycore)]
    if _fastcore is not None:
        backends.insert(0, ("compiled", _fastcore))
    else:
        print("compiled extension not available; timing the fallback only")

    rows = []
    for name, backend in backends:
        t_j = time_call(bench_jacobi(backend, m), args.repeats)
        t_k = time_call(
            bench_kaczmarz(backend, a, b, order, norms2), args.repeats
        )
        rows.append((name, t_j, t_k))

    print(f"{'backend':<10} {'jacobi ' + str(args.size) + 'x' + str(args.size):>16} {'kaczmarz 200x50':>16}")
    for name, t_j, t_k in rows:
        print(f"{name:<10} {t_j:>15.4f}s {t_k:>15.4f}s")
    if len(rows) == 2:
        print(
            f"speedup: jacobi {rows[1][1] / rows[0][1]:.1f}x, "
            f"kaczmarz {rows[1][2] / rows[0][2]:.1f}x"
        )


if __name__ == "__main__":
    main()
