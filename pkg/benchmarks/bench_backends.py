"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_backends.py [--repeat 5] [--batch 2000]
"""

import argparse
import time

import numpy as np

from orbit_entropy import kernels


def _hermitian(d, rng):
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (z + z.conj().T) / 2.0


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--batch", type=int, default=2000)
    parser.add_argument("--dims", type=int, nargs="+", default=[4, 8, 16, 32, 64])
    args = parser.parse_args()
    rng = np.random.default_rng(0)

    # compile once outside the timings
    kernels.jacobi_hermitian(np.eye(2), backend="numba")
    kernels.batch_eigvalsh(np.eye(2)[None], backend="numba")

    print(f"{'kernel':<28}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>10}")
    for d in args.dims:
        a = _hermitian(d, rng)
        t_nb = best_of(lambda: kernels.jacobi_hermitian(a, backend="numba"), args.repeat)
        t_np = best_of(lambda: kernels.jacobi_hermitian(a, backend="numpy"), args.repeat)
        print(f"{f'jacobi d={d}':<28}{t_nb * 1e3:>12.3f}{t_np * 1e3:>12.3f}{t_np / t_nb:>10.1f}")

    for d in (2, 4, 6):
        stack = np.array([_hermitian(d, rng) for _ in range(args.batch)])
        t_nb = best_of(lambda: kernels.batch_eigvalsh(stack, backend="numba"), args.repeat)
        t_np = best_of(lambda: kernels.batch_eigvalsh(stack, backend="numpy"), 1)
        label = f"batch {args.batch}x d={d}"
        print(f"{label:<28}{t_nb * 1e3:>12.3f}{t_np * 1e3:>12.3f}{t_np / t_nb:>10.1f}")


if __name__ == "__main__":
    main()
