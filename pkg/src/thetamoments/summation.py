"""Deterministic summation and simple parallel-map helpers.

Two concerns are handled here once so every module behaves the same way:

* accuracy: long scalar accumulations use Neumaier's compensated summation;
  vector reductions go through fixed-size chunks summed with numpy's pairwise
  algorithm and then combined left-to-right.

* determinism: the chunk boundaries and the combine order depend only on the
  input length, never on how many workers computed the chunks, so results are
  bit-identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

import numpy as np

T = TypeVar("T")
U = TypeVar("U")

CHUNK = 1024


def neumaier_sum(values: Iterable[complex]) -> complex:
    """Compensated (Neumaier) sum of a scalar iterable; exact to ~1 ulp."""
    sr = cr = 0.0  # running sum / compensation, real part
    si = ci = 0.0
    for v in values:
        v = complex(v)
        t = sr + v.real
        if abs(sr) >= abs(v.real):
            cr += (sr - t) + v.real
        else:
            cr += (v.real - t) + sr
        sr = t
        t = si + v.imag
        if abs(si) >= abs(v.imag):
            ci += (si - t) + v.imag
        else:
            ci += (v.imag - t) + si
        si = t
    return complex(sr + cr, si + ci)


def chunked_sum(values: np.ndarray, chunk: int = CHUNK) -> complex:
    """Sum an array in fixed-size chunks, combining partials in index order.

    The chunking grid depends only on len(values), so the result is invariant
    under any parallel split of the chunk work.
    """
    a = np.asarray(values)
    if a.size == 0:
        return 0.0 if not np.iscomplexobj(a) else 0j
    partials = [np.sum(a[i:i + chunk]) for i in range(0, a.size, chunk)]
    return neumaier_sum(partials) if np.iscomplexobj(a) else neumaier_sum(partials).real


def parallel_map(fn: Callable[[T], U], items: Sequence[T], workers: int = 1) -> list[U]:
    """Map preserving input order; thread pool when workers > 1.

    Used for embarrassingly parallel batches (per-prime scans, per-sample
    draws).  Output order is the input order regardless of scheduling.
    """
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
