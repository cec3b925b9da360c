"""Benchmark the weak-separation kernels: numba @njit vs pure numpy.

Run as:
    python3 benchmarks/bench_separation.py
    ICEQUIVER_BACKEND=numpy python3 benchmarks/bench_separation.py

or let the script fork itself to time both backends side by side.
"""
import os
import subprocess
import sys
import time
from itertools import combinations

import numpy as np


def bench(k, n, repeats=3):
    from icequiver import _kernels
    from icequiver.subsets import subset

    subs = [subset(c, n) for c in combinations(range(1, n + 1), k)]
    masks = np.array([s.mask() for s in subs], dtype=np.uint64)
    npairs = len(subs) * (len(subs) - 1) // 2
    # warm once so jit compilation is not timed
    _kernels.separated_matrix(masks[:4], n)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        m = _kernels.separated_matrix(masks, n)
        times.append(time.perf_counter() - t0)
    best = min(times)
    rate = npairs / best / 1e6
    print(
        f"  ({k},{n}): {len(subs):5d} subsets, {npairs:9d} pairs: "
        f"{best * 1e3:8.1f} ms  ({rate:6.1f} M pairs/s)"
    )
    return int(m.sum())


def run(backend=None):
    if backend is not None and backend != os.environ.get("ICEQUIVER_BACKEND", ""):
        env = dict(os.environ, ICEQUIVER_BACKEND=backend)
        subprocess.run([sys.executable, __file__, "--single"], env=env, check=True)
        return
    from icequiver import _kernels

    print(f"backend: {_kernels.backend_name()}")
    checks = []
    for k, n in [(3, 9), (4, 12), (6, 14), (5, 16)]:
        checks.append(bench(k, n))
    print(f"  checksum: {checks}")


if __name__ == "__main__":
    if "--single" in sys.argv:
        run()
    else:
        for backend in ("numba", "numpy"):
            run(backend)
