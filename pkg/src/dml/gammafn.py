"""Complex gamma function: Stirling series with argument lifting.

The working strip only needs moderate arguments, so the classical recipe is
enough: lift the argument with Gamma(z) = Gamma(z+n) / (z (z+1) ... (z+n-1))
until |z| >= 10, apply the Stirling series with nine exact Bernoulli
correction terms (relative error below 1e-14 there), and use the reflection
formula for Re z < 1/2.
"""

from __future__ import annotations

import cmath
import math

from ._bernoulli import bernoulli_numbers

__all__ = ["gamma", "log_gamma", "log_gamma_abs"]

_LIFT_RADIUS = 10.0
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# B_{2k} / (2k (2k-1)) for k = 1..9
_STIRLING = tuple(
    float(b) / ((2 * k) * (2 * k - 1))
    for k, b in ((k, bernoulli_numbers(18)[2 * k]) for k in range(1, 10))
)


def _log_gamma_big(z: complex) -> complex:
    """log Gamma(z) for |z| >= 10 and Re z > 0 (principal branch)."""
    out = (z - 0.5) * cmath.log(z) - z + _HALF_LOG_TWO_PI
    zinv2 = 1.0 / (z * z)
    term = 1.0 / z
    for coeff in _STIRLING:
        out += coeff * term
        term *= zinv2
    return out


def log_gamma(z: complex) -> complex:
    """log Gamma(z) for Re z >= 0.5 (branch follows the lifting product)."""
    z = complex(z)
    if z.real < 0.5:
        raise ValueError("log_gamma needs Re z >= 0.5; use gamma() for the rest")
    shift = 0j
    while abs(z) < _LIFT_RADIUS:
        shift += cmath.log(z)
        z += 1.0
    return _log_gamma_big(z) - shift


def gamma(z: complex) -> complex:
    """Gamma(z) for complex z; poles at non-positive integers raise ValueError."""
    z = complex(z)
    if z.real < 0.5:
        if z.imag == 0.0 and z.real == int(z.real):
            raise ValueError(f"gamma pole at z = {z.real:g}")
        # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    return cmath.exp(log_gamma(z))


def _log_abs_sin_pi(z: complex) -> float:
    y = abs(z.imag)
    if y > 30.0:
        # |sin(pi z)| = e^{pi|y|}/2 up to a relative error below e^{-2 pi y}
        return math.pi * y - math.log(2.0)
    return math.log(abs(cmath.sin(math.pi * z)))


def log_gamma_abs(z: complex) -> float:
    """log |Gamma(z)|, overflow-safe; used for decay estimates and guards."""
    z = complex(z)
    if z.real < 0.5:
        return math.log(math.pi) - _log_abs_sin_pi(z) - log_gamma_abs(1.0 - z)
    return log_gamma(z).real
