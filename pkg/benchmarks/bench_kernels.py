"""Compare the numba and pure-numpy contraction kernels.

Times the construction of extended correlation tensors for a few system
shapes with both backends and prints a small table. Run directly:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from ctmoments import _kernels, states
from ctmoments.bloch import correlation_tensor

CASES = [
    ((3, 3), 50),
    ((4, 4), 20),
    ((2, 2, 2), 50),
    ((2, 2, 2, 2), 10),
    ((3, 3, 3), 5),
]


def time_backend(rho, use_numba, repeats):
    # warm up (JIT compile / einsum path caching)
    correlation_tensor(rho, extended=True, use_numba=use_numba)
    t0 = time.perf_counter()
    for _ in range(repeats):
        correlation_tensor(rho, extended=True, use_numba=use_numba)
    return (time.perf_counter() - t0) / repeats


def main():
    if not _kernels.HAS_NUMBA:
        print("numba not importable; only the numpy path will run")
    rng = np.random.default_rng(0)
    print(f"{'dims':>14} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>9}")
    for dims, repeats in CASES:
        rho = states.random_density(dims, rng)
        t_np = time_backend(rho, use_numba=False, repeats=repeats)
        if _kernels.HAS_NUMBA:
            t_nb = time_backend(rho, use_numba=True, repeats=repeats)
            ratio = f"{t_np / t_nb:9.2f}"
            nb_ms = f"{t_nb * 1e3:12.3f}"
        else:
            ratio, nb_ms = "      n/a", "         n/a"
        print(f"{str(dims):>14} {t_np * 1e3:12.3f} {nb_ms} {ratio}")


if __name__ == "__main__":
    main()
