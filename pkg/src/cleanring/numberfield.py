"""Cyclotomic and quadratic base fields and their prime-local data.

``CyclotomicField(n)`` is the field of n-th roots of unity over the
rationals (n == 1 gives the rationals themselves); ``QuadraticField(d)``
adjoins sqrt(d) for a square-free d outside {0, 1}.  For a rational
prime p, ``localize`` returns the residue degree f and norm p**f shared
by every prime ideal above p.  All decisions downstream consume a prime
ideal only through that norm, so the pair (p, f) identifies everything
that matters and no ideal arithmetic is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import (
    coprime_part,
    euler_phi,
    factorize,
    is_prime,
    legendre,
    mult_order,
)

__all__ = [
    "CyclotomicField",
    "Field",
    "PrimeLocalization",
    "QuadraticField",
    "contains_quadratic",
    "degree_adjoin",
    "discriminant",
    "localize",
    "quadratic_real_adjoin_equal",
    "real_cyclotomic_adjoin_equal",
    "splitting_symbol",
]


@dataclass(frozen=True)
class CyclotomicField:
    """Field of n-th roots of unity; n == 1 encodes the plain rationals."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"cyclotomic parameter must be >= 1, got {self.n}")


def _check_square_free(d: int) -> None:
    if d in (0, 1):
        raise ValueError("d must be a square-free integer other than 0 and 1")
    if any(k > 1 for _, k in factorize(abs(d)).factors):
        raise ValueError(f"d must be square-free, got {d}")


@dataclass(frozen=True)
class QuadraticField:
    """Field obtained by adjoining sqrt(d); d square-free, not 0 or 1."""

    d: int

    def __post_init__(self):
        _check_square_free(self.d)

    @property
    def discriminant(self) -> int:
        return discriminant(self.d)


Field = CyclotomicField | QuadraticField


@dataclass(frozen=True)
class PrimeLocalization:
    """Residue data of the primes above p: ``norm == p**residue_degree``."""

    p: int
    residue_degree: int
    norm: int


def discriminant(d: int) -> int:
    """Field discriminant of the quadratic field of sqrt(d).

    4d in general, but d itself when d = 1 (mod 4).
    """
    _check_square_free(d)
    return d if d % 4 == 1 else 4 * d


def splitting_symbol(field: QuadraticField, p: int) -> int:
    """How p sits in the quadratic field: 1 split, -1 inert, 0 ramified.

    For odd p this is the Legendre symbol of the discriminant.  For
    p == 2 the same trichotomy is read off the discriminant modulo 8:
    even means ramified, 1 split, 5 inert.  The residue degree is 2
    exactly when the symbol is -1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    delta = field.discriminant
    if p == 2:
        if delta % 2 == 0:
            return 0
        return 1 if delta % 8 == 1 else -1
    return legendre(delta, p)


def localize(field: Field, p: int) -> PrimeLocalization:
    """Residue degree and norm of the primes above p in the given field."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(field, CyclotomicField):
        f = mult_order(p, coprime_part(field.n, p))
    else:
        f = 2 if splitting_symbol(field, p) == -1 else 1
    return PrimeLocalization(p, f, p**f)


def degree_adjoin(field: Field, m: int) -> int:
    """Degree of the m-th roots of unity over the field, [K(zeta_m) : K].

    Cyclotomic K: phi(lcm(n, m)) / phi(n).  Quadratic K: phi(m), halved
    when K already sits inside the m-th cyclotomic field, which needs
    m >= 3 since the discriminant is at least 3 in absolute value.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if isinstance(field, CyclotomicField):
        return euler_phi(math.lcm(field.n, m)) // euler_phi(field.n)
    if m >= 3 and contains_quadratic(field.d, m):
        return euler_phi(m) // 2
    return euler_phi(m)


def contains_quadratic(d: int, m: int) -> bool:
    """Whether sqrt(d) lies in the m-th cyclotomic field.

    Holds exactly when m is a multiple of the field discriminant,
    divisibility taken on the absolute value.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return m % abs(discriminant(d)) == 0


def real_cyclotomic_adjoin_equal(m: int, k: int) -> bool:
    """Whether adjoining zeta_k to the maximal real subfield of the m-th
    cyclotomic field already gives everything zeta_m generates.

    True exactly when gcd(m, k) >= 3 or m <= 2.
    """
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    return math.gcd(m, k) >= 3 or m <= 2


def quadratic_real_adjoin_equal(d: int, m: int) -> bool:
    """Whether sqrt(d) together with the real part of zeta_m already
    generates zeta_m itself.

    True exactly when m <= 2, or d < 0 with the discriminant dividing m.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    _check_square_free(d)
    return m <= 2 or (d < 0 and contains_quadratic(d, m))
