"""Theta functions theta(1, chi) and their moment sums over primitive characters.

Direct evaluation truncates the Gaussian-weighted character sum once a
certified tail bound drops below the requested eps.  For even primitive
characters the same value is recovered as a vertical contour integral of
L(2s, chi) against (q/pi)^s Gamma(s), which cross-validates the L machinery.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .characters import DirichletCharacter, enumerate_characters, modulus, value_block, weight_block
from .gammafn import gamma
from .lfunc import L_value
from .quadrature import _adaptive
from .reduction import blocks, pairwise_sum, parallel_map

__all__ = [
    "ThetaValue",
    "EmptyParityClassWarning",
    "NearZeroThetaWarning",
    "theta_direct",
    "theta_mellin",
    "theta_moment",
    "theta_values",
]

BLOCK = 256


class EmptyParityClassWarning(UserWarning):
    pass


class NearZeroThetaWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ThetaValue:
    """A truncated theta evaluation with its certified Gaussian tail bound."""

    value: complex
    truncation_n: int
    tail_bound: float


def _tail_bound(q: int, n: int, kappa: int) -> float:
    # summands decrease for n >= sqrt(q/(2 pi)), so the integral bounds the tail
    decay = math.exp(-math.pi * n * n / q)
    if kappa == 0:
        return q / (2.0 * math.pi * n) * decay
    return q / (2.0 * math.pi) * (1.0 + 1.0 / n) * decay


def _truncation_point(q: int, eps: float, kappa: int) -> int:
    n = max(
        math.ceil(math.sqrt(q * (math.log(1.0 / eps) + 5.0) / math.pi)),
        math.ceil(math.sqrt(q / (2.0 * math.pi))) + 1,
    )
    while _tail_bound(q, n, kappa) >= eps:
        n = max(n + 1, math.ceil(n * 1.05))
    return n


def theta_direct(chi: DirichletCharacter, eps: float = 1e-12) -> ThetaValue:
    """theta(1, chi) = sum_n chi(n) n^kappa e^{-pi n^2 / q}, tail certified below eps."""
    if eps <= 0.0:
        raise ValueError(f"eps must be positive (got {eps})")
    q = chi.modulus.q
    kappa = chi.kappa
    n = _truncation_point(q, eps, kappa)
    ns = np.arange(1, n + 1, dtype=np.float64)
    weights = np.exp(-math.pi * ns * ns / q)
    if kappa:
        weights = weights * ns
    vals = chi.value_table[np.arange(1, n + 1) % q]
    value = complex(pairwise_sum(vals * weights))
    return ThetaValue(value, n, _tail_bound(q, n, kappa))


def _residue_folded_weights(q: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(w0, w1): Gaussian weights for n <= N folded onto residues mod q."""
    ns = np.arange(1, n + 1, dtype=np.float64)
    g = np.exp(-math.pi * ns * ns / q)
    res = np.arange(1, n + 1) % q
    w0 = np.bincount(res, weights=g, minlength=q)
    w1 = np.bincount(res, weights=g * ns, minlength=q)
    return w0, w1


def theta_values(
    q: int,
    chars: Sequence[DirichletCharacter],
    eps: float = 1e-12,
    jobs: int = 1,
) -> np.ndarray:
    """theta(1, chi) for a list of characters mod q (vectorized in fixed blocks)."""
    if not chars:
        return np.zeros(0, dtype=np.complex128)
    mod = modulus(q)
    n = max(_truncation_point(q, eps, 0), _truncation_point(q, eps, 1))
    w0, w1 = _residue_folded_weights(q, n)
    kappas = np.asarray([c.kappa for c in chars])
    weights = weight_block(chars)

    def one_block(span: tuple[int, int]) -> np.ndarray:
        lo, hi = span
        tables = value_block(mod, weights[lo:hi])
        out = tables @ w0
        odd = kappas[lo:hi] == 1
        if np.any(odd):
            out[odd] = (tables[odd] @ w1)
        return out

    parts = parallel_map(one_block, blocks(len(chars), BLOCK), jobs)
    return np.concatenate(parts)


def theta_moment(
    q: int,
    k: float,
    parity: str,
    eps: float = 1e-12,
    jobs: int = 1,
) -> float:
    """Moment sum of |theta(1, chi)|^(2k) over primitive characters of one parity.

    k = 0 counts the class (|theta|^0 = 1), flagging near-zero theta values;
    an empty parity class returns 0.0 with a warning.
    """
    if q < 3:
        raise ValueError(f"theta_moment needs q >= 3 (got {q})")
    if k < 0:
        raise ValueError(f"k must be nonnegative (got {k})")
    chars = enumerate_characters(q, primitive=True, parity=parity)
    if not chars:
        warnings.warn(
            f"no primitive {parity} characters mod {q}; moment is an empty sum",
            EmptyParityClassWarning,
            stacklevel=2,
        )
        return 0.0
    values = theta_values(q, chars, eps, jobs)
    mags = np.abs(values)
    if k == 0:
        if np.any(mags < 1e-12):
            warnings.warn(
                f"near-zero theta value in the k=0 count mod {q}",
                NearZeroThetaWarning,
                stacklevel=2,
            )
        return float(len(chars))
    return float(pairwise_sum(mags ** (2.0 * k)))


def theta_mellin(
    chi: DirichletCharacter,
    c: float = 0.25,
    t_max: float = 40.0,
    tol: float = 1e-10,
) -> complex:
    """theta(1, chi) as (1/2pi) int L(2(c+it), chi) (q/pi)^(c+it) Gamma(c+it) dt.

    Stated for even primitive chi only, on the contour Re s = c with c > 1/2
    or c = 1/4.  Unit panels are added outward from t = 0 until either the
    e^{-t/10} decay bound times the largest |L| seen on the last panel drops
    below tol, or |t| reaches t_max.
    """
    if chi.kappa != 0:
        raise ValueError("theta_mellin is defined here for even characters only")
    if not chi.is_primitive:
        raise ValueError("theta_mellin requires a primitive character")
    if not (c > 0.5 or abs(c - 0.25) < 1e-12):
        raise ValueError(f"contour must have c > 1/2 or c = 1/4 (got c = {c})")
    if t_max <= 0.0:
        raise ValueError(f"degenerate quadrature range: t_max = {t_max} wipes the contour")
    q = chi.modulus.q
    qpi = q / math.pi
    l_peak = [0.0]

    def f(ts: np.ndarray) -> np.ndarray:
        out = np.empty(len(ts), dtype=np.complex128)
        for i, t in enumerate(ts):
            s = complex(c, t)
            lval = L_value(2.0 * s, chi)
            l_peak[0] = max(l_peak[0], abs(lval))
            out[i] = lval * (qpi**s) * gamma(s)
        return out

    total = 0j
    t0 = 0.0
    while t0 < t_max:
        t1 = min(t0 + 1.0, t_max)
        l_peak[0] = 0.0
        total += _adaptive(f, t0, t1, tol / 4.0, 16, 10)
        total += _adaptive(f, -t1, -t0, tol / 4.0, 16, 10)
        # remaining |Gamma| L mass, with the crude e^{-t/10} decay bound
        tail = (qpi**c) * l_peak[0] * 10.0 * math.exp(-t1 / 10.0) / math.pi
        t0 = t1
        if t0 >= 5.0 and tail < tol:
            break
    return total / (2.0 * math.pi)
