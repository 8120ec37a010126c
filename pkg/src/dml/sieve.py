"""Segmented sieve of Eratosthenes with cached segments.

Segments are kept in memory per process; when the DML_SIEVE_CACHE environment
variable names a directory, segment prime lists are also persisted there as
.npy files so repeated runs skip the sieving work.  Hard cap 10^8.
"""

from __future__ import annotations

import math
import os
from pathlib import Path

import numpy as np

__all__ = ["SieveCapacityError", "PrimeSieve", "primes_up_to", "default_sieve"]

SEGMENT_SIZE = 1 << 20
SIEVE_CAP = 10**8
_CACHE_ENV = "DML_SIEVE_CACHE"


class SieveCapacityError(ValueError):
    """Requested primes beyond the configured sieve cap."""


def _simple_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


class PrimeSieve:
    def __init__(self, cache_dir: str | os.PathLike | None = None, cap: int = SIEVE_CAP):
        if cache_dir is None:
            cache_dir = os.environ.get(_CACHE_ENV)
        self._dir = Path(cache_dir) if cache_dir else None
        if self._dir is not None:
            self._dir.mkdir(parents=True, exist_ok=True)
        self.cap = int(cap)
        self._base = _simple_sieve(math.isqrt(self.cap) + 1)
        self._segments: dict[int, np.ndarray] = {}

    def _segment(self, idx: int) -> np.ndarray:
        seg = self._segments.get(idx)
        if seg is not None:
            return seg
        if self._dir is not None:
            path = self._dir / f"seg_{SEGMENT_SIZE}_{idx}.npy"
            if path.exists():
                seg = np.load(path)
                self._segments[idx] = seg
                return seg
        lo = idx * SEGMENT_SIZE
        hi = lo + SEGMENT_SIZE
        flags = np.ones(SEGMENT_SIZE, dtype=bool)
        if idx == 0:
            flags[:2] = False
        for p in self._base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            flags[start - lo :: p] = False
        seg = (np.flatnonzero(flags) + lo).astype(np.int64)
        self._segments[idx] = seg
        if self._dir is not None:
            np.save(self._dir / f"seg_{SEGMENT_SIZE}_{idx}.npy", seg)
        return seg

    def primes_up_to(self, x: float) -> np.ndarray:
        """All primes p <= x as an int64 array."""
        if x > self.cap:
            raise SieveCapacityError(
                f"primes requested up to {x:g}, above the sieve cap {self.cap:g}"
            )
        if x < 2:
            return np.zeros(0, dtype=np.int64)
        limit = int(math.floor(x))
        last = limit // SEGMENT_SIZE
        parts = [self._segment(i) for i in range(last + 1)]
        joined = parts[0] if len(parts) == 1 else np.concatenate(parts)
        return joined[: np.searchsorted(joined, limit, side="right")]

    def primes_in(self, lo: float, hi: float) -> np.ndarray:
        """Primes in the half-open range (lo, hi]."""
        ps = self.primes_up_to(hi)
        return ps[np.searchsorted(ps, lo, side="right") :]


_DEFAULT: PrimeSieve | None = None


def default_sieve() -> PrimeSieve:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = PrimeSieve()
    return _DEFAULT


def primes_up_to(x: float) -> np.ndarray:
    return default_sieve().primes_up_to(x)
