"""Deterministic reductions and a fixed-decomposition worker pool.

Floating sums over characters go through an adjacent-pair tree so the result
is a function of the ordered term list only.  Parallelism never changes the
work decomposition (block sizes are fixed); the jobs count only sets how many
blocks run concurrently, which keeps outputs byte-identical across degrees.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

import numpy as np

__all__ = ["pairwise_sum", "parallel_map", "blocks"]

T = TypeVar("T")
R = TypeVar("R")


def pairwise_sum(values) -> complex | float:
    """Adjacent-pair tree sum; the tree shape depends only on the length."""
    buf = np.asarray(values)
    if buf.size == 0:
        return 0.0
    while buf.size > 1:
        even = buf.size - (buf.size % 2)
        head = buf[0:even:2] + buf[1:even:2]
        if buf.size % 2:
            head = np.concatenate((head, buf[-1:]))
        buf = head
    out = buf[0]
    return complex(out) if np.iscomplexobj(buf) else float(out)


def blocks(n: int, block_size: int = 256) -> list[tuple[int, int]]:
    """Fixed [start, stop) decomposition of range(n), independent of jobs."""
    return [(i, min(i + block_size, n)) for i in range(0, n, block_size)]


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    """Ordered map; jobs > 1 runs items concurrently on threads."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
