"""Hot kernels for bulk weak-separation tests on bitmask-encoded subsets.

Two interchangeable backends: a numba @njit kernel and a pure-numpy
fallback.  Selection is by the ICEQUIVER_BACKEND environment variable
("numba" or "numpy"); default is numba when it imports, numpy otherwise.
The search module funnels all its pairwise compatibility tests through
here; see benchmarks/bench_separation.py for a speed comparison.
"""
from __future__ import annotations

import os

import numpy as np

_BACKEND = os.environ.get("ICEQUIVER_BACKEND", "").strip().lower()

if _BACKEND not in ("numpy", "numba", ""):
    raise ValueError(f"ICEQUIVER_BACKEND must be 'numba' or 'numpy', got {_BACKEND!r}")

if _BACKEND != "numpy":
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        if _BACKEND == "numba":
            raise
        _HAVE_NUMBA = False
else:
    _HAVE_NUMBA = False


def backend_name() -> str:
    return "numba" if _HAVE_NUMBA else "numpy"


def _separated_py(a: int, b: int, n: int) -> bool:
    # Reference scalar implementation; both kernels mirror this.
    first = last = 0
    switches = 0
    for i in range(n):
        bit = 1 << i
        t = 1 if (a & bit) else 2 if (b & bit) else 0
        if t == 0:
            continue
        if last != 0 and t != last:
            switches += 1
        if first == 0:
            first = t
        last = t
    if first != 0 and last != first:
        switches += 1
    return switches <= 2


if _HAVE_NUMBA:

    @njit(cache=True)
    def _pair_kernel(masks_a, masks_b, n, out):  # pragma: no cover - compiled
        for p in range(masks_a.shape[0]):
            ma = masks_a[p]
            mb = masks_b[p]
            a = ma & ~mb
            b = mb & ~ma
            first = 0
            last = 0
            switches = 0
            for i in range(n):
                bit = np.uint64(1) << np.uint64(i)
                if a & bit:
                    t = 1
                elif b & bit:
                    t = 2
                else:
                    continue
                if last != 0 and t != last:
                    switches += 1
                if first == 0:
                    first = t
                last = t
            if first != 0 and last != first:
                switches += 1
            out[p] = switches <= 2

    def separated_pairs(masks_a: np.ndarray, masks_b: np.ndarray, n: int) -> np.ndarray:
        masks_a = np.ascontiguousarray(masks_a, dtype=np.uint64)
        masks_b = np.ascontiguousarray(masks_b, dtype=np.uint64)
        out = np.empty(masks_a.shape[0], dtype=np.bool_)
        _pair_kernel(masks_a, masks_b, n, out)
        return out

else:

    def separated_pairs(masks_a: np.ndarray, masks_b: np.ndarray, n: int) -> np.ndarray:
        """Vectorized fallback: expand per-position type codes and count
        cyclic switches between the two sides of the symmetric difference."""
        masks_a = np.asarray(masks_a, dtype=np.uint64)
        masks_b = np.asarray(masks_b, dtype=np.uint64)
        npairs = masks_a.shape[0]
        out = np.empty(npairs, dtype=np.bool_)
        chunk = max(1, 2_000_000 // max(n, 1))
        bits = (np.uint64(1) << np.arange(n, dtype=np.uint64))[None, :]
        for lo in range(0, npairs, chunk):
            hi = min(npairs, lo + chunk)
            ma = masks_a[lo:hi, None]
            mb = masks_b[lo:hi, None]
            a = (ma & ~mb & bits) != 0
            b = (mb & ~ma & bits) != 0
            t = np.where(a, 1, 0) + np.where(b, 2, 0)  # 0, 1, or 2 per position
            nz = t != 0
            # forward-fill the last nonzero type to compare against
            idx = np.where(nz, np.arange(n)[None, :], -1)
            ffill = np.maximum.accumulate(idx, axis=1)
            prev = np.concatenate([np.full((hi - lo, 1), -1), ffill[:, :-1]], axis=1)
            rows = np.arange(hi - lo)[:, None]
            prev_t = np.where(prev >= 0, t[rows, np.maximum(prev, 0)], 0)
            switches = ((t != 0) & (prev_t != 0) & (t != prev_t)).sum(axis=1)
            # cyclic wrap: first nonzero vs last nonzero
            any_nz = nz.any(axis=1)
            first_pos = np.argmax(nz, axis=1)
            last_pos = ffill[:, -1]
            first_t = t[np.arange(hi - lo), first_pos]
            last_t = t[np.arange(hi - lo), np.maximum(last_pos, 0)]
            switches = switches + (any_nz & (first_t != last_t))
            out[lo:hi] = switches <= 2
        return out


def separated_matrix(masks: np.ndarray, n: int) -> np.ndarray:
    """Symmetric boolean matrix of pairwise weak separation."""
    masks = np.asarray(masks, dtype=np.uint64)
    m = masks.shape[0]
    ii, jj = np.triu_indices(m, k=1)
    flags = separated_pairs(masks[ii], masks[jj], n)
    out = np.eye(m, dtype=np.bool_)
    out[ii, jj] = flags
    out[jj, ii] = flags
    return out


def separated_cross(masks_a: np.ndarray, masks_b: np.ndarray, n: int) -> np.ndarray:
    """Boolean matrix: entry (i, j) tests masks_a[i] against masks_b[j]."""
    masks_a = np.asarray(masks_a, dtype=np.uint64)
    masks_b = np.asarray(masks_b, dtype=np.uint64)
    la, lb = masks_a.shape[0], masks_b.shape[0]
    aa = np.repeat(masks_a, lb)
    bb = np.tile(masks_b, la)
    return separated_pairs(aa, bb, n).reshape(la, lb)
