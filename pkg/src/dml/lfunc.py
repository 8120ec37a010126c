"""Dirichlet L-functions, Hurwitz zeta and the completed L-function.

Evaluation backbone: Euler-Maclaurin for zeta(s, a), assembled into
L(s, chi) = q^-s sum_a chi(a) zeta(s, a/q).  The shift count is
N = max(30, ceil(3|t|)) with twelve exact Bernoulli correction terms and an
a-posteriori error estimate from the last term; if the estimate misses the
requested tolerance the shift is doubled and the evaluation retried.

Hurwitz rows zeta(s, (1..q)/q) are cached per (q, s) because the moment and
contour engines revisit the same evaluation points for every character mod q.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

import numpy as np

from ._bernoulli import bernoulli_numbers
from .characters import DirichletCharacter, gauss_sum
from .gammafn import gamma

__all__ = [
    "PoleError",
    "hurwitz_zeta",
    "zeta_value",
    "L_value",
    "L_values",
    "completed_L",
    "root_number",
    "functional_equation_residual",
    "LogAbsL",
    "log_abs_L",
    "clear_caches",
]


class PoleError(ValueError):
    """Evaluation requested exactly at a pole."""


_EM_ORDER = 12
# B_{2k} / (2k)! for k = 1.._EM_ORDER+1 (last one drives the error estimate)
_EM_COEFFS = tuple(
    float(bernoulli_numbers(2 * _EM_ORDER + 2)[2 * k]) / math.factorial(2 * k)
    for k in range(1, _EM_ORDER + 2)
)

GAMMA_IM_CAP = 400.0  # |Im (s+kappa)/2| guard for the completed function


def _em_shift(s: complex) -> int:
    return max(30, math.ceil(3.0 * abs(s.imag)))


def _hurwitz_vec(s: complex, a: np.ndarray, tol: float) -> np.ndarray:
    """Euler-Maclaurin zeta(s, a) for a vector of a > 0, s != 1."""
    n0 = _em_shift(s)
    for _ in range(4):
        n = np.arange(n0, dtype=np.float64)[:, None]
        head = np.sum((n + a[None, :]).astype(np.complex128) ** (-s), axis=0)
        na = (n0 + a).astype(np.complex128)
        out = head + na ** (1.0 - s) / (s - 1.0) + 0.5 * na ** (-s)
        poch = s
        napow = na ** (-s - 1.0)
        nainv2 = na ** (-2.0)
        last = np.zeros_like(out)
        for k in range(1, _EM_ORDER + 2):
            last = _EM_COEFFS[k - 1] * poch * napow
            if k <= _EM_ORDER:
                out = out + last
            poch = poch * (s + 2 * k - 1) * (s + 2 * k)
            napow = napow * nainv2
        if float(np.max(np.abs(last))) <= tol:
            return out
        n0 *= 2
    return out


def _hurwitz_vec_deflated_s1(a: np.ndarray) -> np.ndarray:
    """lim_{s->1} [zeta(s, a) - 1/(s-1)]  (equals -digamma(a))."""
    n0 = 30
    n = np.arange(n0, dtype=np.float64)[:, None]
    head = np.sum(1.0 / (n + a[None, :]), axis=0)
    na = n0 + a
    out = head - np.log(na) + 0.5 / na
    napow = na ** (-2.0)
    for k in range(1, _EM_ORDER + 1):
        # (s)_{2k-1} at s=1 is (2k-1)!, so the correction is B_{2k}/(2k) na^{-2k}
        out = out + (_EM_COEFFS[k - 1] * math.factorial(2 * k - 1)) * napow
        napow = napow / (na * na)
    return out.astype(np.complex128)


def hurwitz_zeta(s: complex, a: float, tol: float = 1e-12) -> complex:
    """zeta(s, a) = sum_{n>=0} (n+a)^-s, continued by Euler-Maclaurin.

    Requires a > 0 (the guaranteed accuracy window is a in (0, 1]); raises
    PoleError at s = 1.
    """
    s = complex(s)
    if a <= 0.0:
        raise ValueError(f"hurwitz_zeta needs a > 0 (got a = {a})")
    if s == 1.0:
        raise PoleError("hurwitz_zeta pole at s = 1")
    return complex(_hurwitz_vec(s, np.asarray([float(a)]), tol)[0])


def zeta_value(s: complex, tol: float = 1e-12) -> complex:
    """Riemann zeta via zeta(s) = zeta(s, 1)."""
    return hurwitz_zeta(s, 1.0, tol)


# per-(q, s) cache of the Hurwitz row zeta(s, (1..q)/q)
_HZ_CACHE: dict[tuple[int, complex, float, bool], np.ndarray] = {}
_HZ_CACHE_MAX = 300_000


def _hurwitz_row(q: int, s: complex, tol: float = 1e-12) -> np.ndarray:
    """zeta(s, a/q) for a = 1..q (deflated by the pole term when s = 1)."""
    deflated = s == 1.0
    key = (q, s, tol, deflated)
    row = _HZ_CACHE.get(key)
    if row is None:
        a = np.arange(1, q + 1, dtype=np.float64) / q
        row = _hurwitz_vec_deflated_s1(a) if deflated else _hurwitz_vec(s, a, tol)
        row.setflags(write=False)
        if len(_HZ_CACHE) >= _HZ_CACHE_MAX:
            _HZ_CACHE.clear()
        _HZ_CACHE[key] = row
    return row


def clear_caches() -> None:
    _HZ_CACHE.clear()


def _l_from_row(s: complex, values: np.ndarray, q: int, row: np.ndarray) -> complex:
    # values is the character table indexed 0..q-1; row index a-1 holds a/q
    table = np.concatenate((values[1:], values[:1]))  # a = 1..q
    return complex(q ** (-s) * np.dot(table, row))


def L_value(s: complex, chi: DirichletCharacter, tol: float = 1e-12) -> complex:
    """L(s, chi) = q^-s sum_{a=1}^{q} chi(a) zeta(s, a/q).

    Valid at every regular point, including s = 1 for non-principal chi
    (the simple poles of the Hurwitz rows cancel there); the principal
    character at s = 1 raises PoleError.
    """
    s = complex(s)
    q = chi.modulus.q
    if s == 1.0:
        if chi.is_principal:
            raise PoleError("L(s, principal chi) has its pole at s = 1")
        row = _hurwitz_row(q, s, tol)
        return _l_from_row(s, chi.value_table, q, row)
    return _l_from_row(s, chi.value_table, q, _hurwitz_row(q, s, tol))


def L_values(s: complex, mod_q: int, tables: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """L(s, chi) for a block of characters given their value tables ((B, q) matrix)."""
    s = complex(s)
    row = _hurwitz_row(mod_q, s, tol)
    block = np.concatenate((tables[:, 1:], tables[:, :1]), axis=1)
    return (mod_q ** (-s)) * (block @ row)


def completed_L(s: complex, chi: DirichletCharacter, tol: float = 1e-12) -> complex:
    """Lambda(s, chi) = (q/pi)^((s+kappa)/2) Gamma((s+kappa)/2) L(s, chi) for primitive chi."""
    if not chi.is_primitive:
        raise ValueError("completed_L requires a primitive character")
    s = complex(s)
    w = (s + chi.kappa) / 2.0
    if abs(w.imag) > GAMMA_IM_CAP:
        raise ValueError(
            f"completed_L: |Im (s+kappa)/2| = {abs(w.imag):.3g} exceeds the "
            f"gamma guard {GAMMA_IM_CAP:g}"
        )
    q = chi.modulus.q
    return (q / math.pi) ** w * gamma(w) * L_value(s, chi, tol)


def root_number(chi: DirichletCharacter) -> complex:
    """epsilon(chi) = tau(chi) / (i^kappa sqrt(q)); unit modulus for primitive chi."""
    q = chi.modulus.q
    return gauss_sum(chi) / (1j ** chi.kappa * math.sqrt(q))


def functional_equation_residual(s: complex, chi: DirichletCharacter, tol: float = 1e-12) -> float:
    """|Lambda(s,chi) - eps(chi) Lambda(1-s, conj chi)| / max(|Lambda(s,chi)|, 1e-300).

    Near zero simultaneously validates the L evaluation and the Gauss sum.
    """
    lam = completed_L(s, chi, tol)
    lam_dual = completed_L(1.0 - complex(s), chi.conjugate(), tol)
    eps = root_number(chi)
    return abs(lam - eps * lam_dual) / max(abs(lam), 1e-300)


class LogAbsL(NamedTuple):
    """log|L| together with a candidate-zero flag (set when |L| < threshold)."""

    value: float
    near_zero: bool


def log_abs_L(
    s: complex,
    chi: DirichletCharacter,
    zero_threshold: float = 1e-12,
    tol: float = 1e-12,
) -> LogAbsL:
    """log |L(s, chi)|, flagging candidate zeros instead of returning -inf."""
    mag = abs(L_value(s, chi, tol))
    return LogAbsL(math.log(max(mag, 1e-300)), mag < zero_threshold)
