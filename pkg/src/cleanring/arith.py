"""Exact elementary number theory on plain Python integers.

Trial-division factorization, the totient via the prime-power product
formula, divisor enumeration, multiplicative orders, primitive-root
tests and the Legendre symbol through Euler's criterion.  All inputs
are desk scale; nothing here is tuned for cryptographic sizes (a stated
non-goal).  Everything is a pure function of its arguments, and the
hot ones are memoized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Factorization",
    "coprime_part",
    "divisors",
    "euler_phi",
    "factorize",
    "is_prime",
    "is_primitive_root",
    "legendre",
    "mult_order",
]


@dataclass(frozen=True)
class Factorization:
    """``value == prod(p**k for p, k in factors)`` with primes increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        previous = 1
        product = 1
        for p, k in self.factors:
            if k < 1 or p <= previous or not is_prime(p):
                raise ValueError(f"invalid factorization entry {(p, k)}")
            previous = p
            product *= p**k
        if product != self.value:
            raise ValueError(f"factors multiply to {product}, not {self.value}")


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor ``n >= 1`` into prime powers; ``factorize(1)`` has no factors."""
    if n < 1:
        raise ValueError(f"cannot factor {n}: need a positive integer")
    value = n
    factors = []
    for p in (2, 3):
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k:
            factors.append((p, k))
    p = 5
    while p * p <= n:
        for q in (p, p + 2):
            k = 0
            while n % q == 0:
                n //= q
                k += 1
            if k:
                factors.append((q, k))
        p += 6
    if n > 1:
        factors.append((n, 1))
    return Factorization(value, tuple(factors))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler's totient, computed as ``prod(p**(k-1) * (p-1))``."""
    out = 1
    for p, k in factorize(n).factors:
        out *= p ** (k - 1) * (p - 1)
    return out


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` in increasing order, 1 and n included."""
    ds = [1]
    for p, k in factorize(n).factors:
        ds = [d * p**j for d in ds for j in range(k + 1)]
    return tuple(sorted(ds))


def mult_order(a: int, n: int) -> int:
    """Multiplicative order of ``a`` modulo ``n``: least k >= 1 with a**k = 1.

    Requires gcd(a, n) == 1.  The order divides phi(n), so the divisors
    of phi(n) are tested in increasing order instead of iterating powers
    one by one.  Modulo 1 everything is a unit of order 1, which keeps
    divisor loops free of special cases.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    return _unit_order(a, n)


@lru_cache(maxsize=None)
def _unit_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    for k in divisors(euler_phi(n)):
        if pow(a, k, n) == 1:
            return k
    raise AssertionError(f"no order found for {a} modulo {n}")


def is_primitive_root(a: int, n: int) -> bool:
    """True when ``a`` generates the units mod ``n``, i.e. its order is phi(n)."""
    return mult_order(a, n) == euler_phi(n)


def coprime_part(n: int, p: int) -> int:
    """Largest divisor of ``n`` not divisible by the prime ``p``."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    while n % p == 0:
        n //= p
    return n


def legendre(a: int, p: int) -> int:
    """Legendre symbol of ``a`` modulo an odd prime ``p``, in {-1, 0, 1}.

    Euler's criterion: ``a**((p-1)/2) mod p``, read as -1 when the power
    lands on p - 1.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"Legendre symbol needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r
