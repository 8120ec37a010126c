"""Exact arithmetic on the group of Dirichlet characters mod q.

The unit group (Z/qZ)* is split by CRT into cyclic pieces: one piece per odd
prime power, generated by the least primitive root, and for the 2-power part
either nothing (2), the single generator -1 (4), or the two generators -1 and
5 (8 and above).  A character is an integer exponent vector against those
generators, so products, conjugates, parity and conductor tests are exact
integer arithmetic.  Values are rational exponents of a primitive root of
unity and only the final complex exponential is floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as _iproduct
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "CyclicFactor",
    "Modulus",
    "DirichletCharacter",
    "modulus",
    "enumerate_characters",
    "eval_character",
    "conductor_and_primitivity",
    "gauss_sum",
]

TWO_PI = 2.0 * math.pi


def _factorize(q: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization; q is desk-scale."""
    out = []
    n = q
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _distinct_prime_factors(n: int) -> list[int]:
    return [p for p, _ in _factorize(n)]


def _multiplicative_order(g: int, m: int, bound: int) -> int:
    """Order of g mod m, knowing it divides `bound`."""
    order = bound
    for p in _distinct_prime_factors(bound):
        while order % p == 0 and pow(g, order // p, m) == 1:
            order //= p
    return order


def _least_primitive_root(p: int) -> int:
    phi = p - 1
    rad = _distinct_prime_factors(phi)
    for g in range(2, p):
        if all(pow(g, phi // r, p) != 1 for r in rad):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


def _primitive_root_mod_pe(p: int, e: int) -> int:
    """Primitive root mod p^e for odd p (a root mod p^2 works for all e)."""
    g = _least_primitive_root(p)
    if e >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class CyclicFactor:
    """One cyclic piece of (Z/qZ)*: a generator local to a prime power."""

    prime_power: int
    generator: int
    order: int


@dataclass(frozen=True)
class Modulus:
    """The modulus q with the CRT decomposition of its unit group.

    All lookup tables (discrete logs per factor, coprimality mask, root-of-
    unity table) hang off this object and are shared read-only by every
    character mod q.
    """

    q: int
    factorization: tuple[tuple[int, int], ...]
    factors: tuple[CyclicFactor, ...]
    phi: int
    group_exponent: int

    @cached_property
    def coprime_mask(self) -> np.ndarray:
        mask = np.gcd(np.arange(self.q, dtype=np.int64), self.q) == 1
        mask.setflags(write=False)
        return mask

    @cached_property
    def dlog_matrix(self) -> np.ndarray:
        """(q, num_factors) table: residue n -> exponent of n in each cyclic piece.

        Rows for non-coprime residues are zero; they are masked out whenever
        values are materialised.
        """
        q = self.q
        cols = []
        for fac in self.factors:
            pp, g, d = fac.prime_power, fac.generator, fac.order
            local = np.zeros(pp, dtype=np.int64)
            if pp % 2 == 0 and pp >= 8 and g == 5:
                # second generator of the 2-power part; fill jointly with -1
                continue
            if pp % 2 == 0 and pp >= 8:
                # joint fill for the pair (-1, 5): every odd residue is
                # (-1)^a 5^b with a in {0,1}, b in [0, pp/4)
                local_a = np.zeros(pp, dtype=np.int64)
                local_b = np.zeros(pp, dtype=np.int64)
                for a in range(2):
                    for b in range(pp // 4):
                        r = (pow(pp - 1, a, pp) * pow(5, b, pp)) % pp
                        local_a[r] = a
                        local_b[r] = b
                res = np.arange(q, dtype=np.int64) % pp
                cols.append(local_a[res])
                cols.append(local_b[res])
                continue
            acc = 1
            for k in range(d):
                local[acc] = k
                acc = (acc * g) % pp
            res = np.arange(q, dtype=np.int64) % pp
            cols.append(local[res])
        if not cols:
            mat = np.zeros((q, 0), dtype=np.int64)
        else:
            mat = np.stack(cols, axis=1)
        mat.setflags(write=False)
        return mat

    @cached_property
    def roots_of_unity(self) -> np.ndarray:
        e = self.group_exponent
        roots = np.exp(2j * math.pi * np.arange(e) / e)
        roots.setflags(write=False)
        return roots

    @cached_property
    def divisors(self) -> tuple[int, ...]:
        divs = [1]
        for p, e in self.factorization:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return tuple(sorted(divs))

    @cached_property
    def _induction_classes(self) -> tuple[tuple[int, np.ndarray], ...]:
        """Per divisor f of q: the coprime residues n = 1 (mod f), 1 <= n <= q."""
        out = []
        for f in self.divisors:
            ns = np.arange(1, self.q + 1, f, dtype=np.int64) % self.q
            ns = ns[self.coprime_mask[ns]]
            out.append((f, ns))
        return tuple(out)

    def character(self, exponents: Sequence[int]) -> "DirichletCharacter":
        return DirichletCharacter(self, tuple(exponents))

    def characters(self) -> list["DirichletCharacter"]:
        """All phi(q) characters in canonical (exponent-lexicographic) order."""
        ranges = [range(f.order) for f in self.factors]
        return [self.character(exps) for exps in _iproduct(*ranges)]


def _build_modulus(q: int) -> Modulus:
    fact = _factorize(q)
    factors: list[CyclicFactor] = []
    for p, e in fact:
        pp = p**e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                factors.append(CyclicFactor(4, 3, 2))
            else:
                factors.append(CyclicFactor(pp, pp - 1, 2))
                factors.append(CyclicFactor(pp, 5, pp // 4))
        else:
            g = _primitive_root_mod_pe(p, e)
            factors.append(CyclicFactor(pp, g, pp // p * (p - 1)))
    phi = 1
    for f in factors:
        phi *= f.order
    exponent = 1
    for f in factors:
        exponent = math.lcm(exponent, f.order)
    for f in factors:
        if _multiplicative_order(f.generator, f.prime_power, f.order) != f.order:
            raise ArithmeticError(
                f"generator {f.generator} mod {f.prime_power} does not have order {f.order}"
            )
    return Modulus(q, fact, tuple(factors), phi, exponent)


@lru_cache(maxsize=None)
def modulus(q: int) -> Modulus:
    """Shared, immutable modulus object for q (cached)."""
    if q < 1:
        raise ValueError(f"modulus must be a positive integer (got {q})")
    return _build_modulus(q)


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod q as an exponent vector over the CRT generators.

    `exponents[j]` is the discrete log of chi(g_j) to the base exp(2*pi*i/d_j)
    where g_j, d_j are the j-th generator and its order.
    """

    modulus: Modulus
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        facs = self.modulus.factors
        if len(self.exponents) != len(facs):
            raise ValueError(
                f"expected {len(facs)} exponents for q={self.modulus.q}, "
                f"got {len(self.exponents)}"
            )
        object.__setattr__(
            self,
            "exponents",
            tuple(int(c) % f.order for c, f in zip(self.exponents, facs)),
        )

    # -- exact exponent arithmetic -------------------------------------------

    @cached_property
    def _weights(self) -> np.ndarray:
        """Per-factor weight so that u(n) = sum_j w_j * dlog_j(n) mod E."""
        e = self.modulus.group_exponent
        w = [c * (e // f.order) for c, f in zip(self.exponents, self.modulus.factors)]
        return np.asarray(w, dtype=np.int64)

    @cached_property
    def exponent_table(self) -> np.ndarray:
        """u(n) for n = 0..q-1 with chi(n) = exp(2*pi*i*u(n)/E); junk off coprimes."""
        mod = self.modulus
        if mod.dlog_matrix.shape[1] == 0:
            u = np.zeros(mod.q, dtype=np.int64)
        else:
            u = (mod.dlog_matrix @ self._weights) % mod.group_exponent
        u.setflags(write=False)
        return u

    @cached_property
    def value_table(self) -> np.ndarray:
        """chi(n) for n = 0..q-1 (zero off the coprime residues)."""
        mod = self.modulus
        vals = mod.roots_of_unity[self.exponent_table].copy()
        vals[~mod.coprime_mask] = 0.0
        vals.setflags(write=False)
        return vals

    def unit_exponent(self, n: int) -> int | None:
        """Exact exponent u with chi(n) = exp(2*pi*i*u/E), or None if gcd(n,q)>1."""
        r = n % self.modulus.q
        if not self.modulus.coprime_mask[r]:
            return None
        return int(self.exponent_table[r])

    def __call__(self, n: int) -> complex:
        r = n % self.modulus.q
        return complex(self.value_table[r])

    # -- derived structure -----------------------------------------------------

    @property
    def is_principal(self) -> bool:
        return all(c == 0 for c in self.exponents)

    @cached_property
    def order(self) -> int:
        out = 1
        for c, f in zip(self.exponents, self.modulus.factors):
            out = math.lcm(out, f.order // math.gcd(c, f.order))
        return out

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    @cached_property
    def kappa(self) -> int:
        """0 for even characters (chi(-1)=1), 1 for odd (chi(-1)=-1)."""
        if self.modulus.q <= 2:
            return 0
        u = self.unit_exponent(self.modulus.q - 1)
        return 0 if u == 0 else 1

    @property
    def parity(self) -> str:
        return "odd" if self.kappa else "even"

    @cached_property
    def conductor(self) -> int:
        """Smallest f | q inducing chi: brute-force induction test over divisors.

        chi is induced mod f iff it is trivial on every coprime n = 1 (mod f).
        """
        u = self.exponent_table
        for f, ns in self.modulus._induction_classes:
            if ns.size == 0 or not np.any(u[ns]):
                return f
        raise AssertionError("unreachable: f = q always induces")

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus.q

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, tuple(-c for c in self.exponents))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"DirichletCharacter(q={self.modulus.q}, exponents={self.exponents})"


# -- module-level operations ----------------------------------------------------


def enumerate_characters(
    q: int,
    primitive: bool | None = None,
    parity: str | None = None,
) -> list[DirichletCharacter]:
    """All characters mod q in canonical order, optionally filtered.

    `primitive=True/False` filters on primitivity; `parity` is "even" or
    "odd".  q = 1 yields the single trivial (even, primitive) character.
    """
    if parity not in (None, "even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd' (got {parity!r})")
    chars: Iterator[DirichletCharacter] = iter(modulus(q).characters())
    if parity is not None:
        want = 1 if parity == "odd" else 0
        chars = (c for c in chars if c.kappa == want)
    if primitive is not None:
        chars = (c for c in chars if c.is_primitive == primitive)
    return list(chars)


def eval_character(chi: DirichletCharacter, n: int) -> complex:
    """chi(n): zero when gcd(n, q) > 1, else a root of unity."""
    return chi(int(n))


def conductor_and_primitivity(chi: DirichletCharacter) -> tuple[int, bool]:
    return chi.conductor, chi.is_primitive


def gauss_sum(chi: DirichletCharacter) -> complex:
    """tau(chi) = sum_{n=1..q} chi(n) e^{2*pi*i*n/q}; |tau| = sqrt(q) for primitive chi."""
    q = chi.modulus.q
    e_q = np.exp(2j * math.pi * np.arange(q) / q)
    return complex(np.dot(chi.value_table, e_q))


# -- bulk helpers (used by the moment engines) -----------------------------------


def weight_block(chars: Sequence[DirichletCharacter]) -> np.ndarray:
    """Stack of per-character weight vectors, rows aligned with `chars`."""
    if not chars:
        return np.zeros((0, 0), dtype=np.int64)
    return np.stack([c._weights for c in chars])


def value_block(mod: Modulus, weights: np.ndarray) -> np.ndarray:
    """Value tables for a block of characters given their weight rows.

    Returns a (block, q) complex matrix without touching per-character caches,
    so scans over thousands of characters stay within transient memory.
    """
    if weights.shape[0] == 0:
        return np.zeros((0, mod.q), dtype=np.complex128)
    if weights.shape[1] == 0:
        u = np.zeros((weights.shape[0], mod.q), dtype=np.int64)
    else:
        u = (weights @ mod.dlog_matrix.T) % mod.group_exponent
    vals = mod.roots_of_unity[u]
    vals[:, ~mod.coprime_mask] = 0.0
    return vals
