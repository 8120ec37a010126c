"""Adaptive panel quadrature on a line segment.

Unit panels with nested Gauss-Legendre evaluation: each panel is integrated
at order n on the whole width and on its two halves; the difference drives
bisection.  Node positions are a deterministic function of the panel
boundaries alone, so evaluations can be cached across repeated integrands
(all characters mod q share the same contour nodes).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

import numpy as np

__all__ = ["integrate", "panel_boundaries"]


@lru_cache(maxsize=None)
def _gl_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _panel_value(f, a: float, b: float, order: int) -> complex:
    x, w = _gl_nodes(order)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return half * complex(np.dot(w, f(mid + half * x)))


def _adaptive(f, a: float, b: float, tol: float, order: int, depth: int) -> complex:
    whole = _panel_value(f, a, b, order)
    mid = 0.5 * (a + b)
    split = _panel_value(f, a, mid, order) + _panel_value(f, mid, b, order)
    if abs(whole - split) <= tol or depth <= 0:
        return split
    return _adaptive(f, a, mid, 0.5 * tol, order, depth - 1) + _adaptive(
        f, mid, b, 0.5 * tol, order, depth - 1
    )


def panel_boundaries(a: float, b: float, width: float = 1.0) -> list[float]:
    """Integer-aligned panel edges covering [a, b]."""
    import math

    edges = [a]
    first = math.floor(a / width) + 1
    k = first
    while k * width < b:
        if k * width > a:
            edges.append(k * width)
        k += 1
    edges.append(b)
    return edges


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    abs_tol: float = 1e-10,
    order: int = 16,
    max_depth: int = 10,
) -> complex:
    """Integral of a vectorized complex-valued f over [a, b]."""
    if b <= a:
        raise ValueError(f"empty integration range [{a}, {b}]")
    edges = panel_boundaries(a, b)
    n_panels = len(edges) - 1
    per_panel = abs_tol / n_panels
    total = 0j
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += _adaptive(f, lo, hi, per_panel, order, max_depth)
    return total
