"""Pure-Python GF(p)[x] kernels.

Dense polynomials are lists of ints in [0, p), lowest degree first,
trailing zeros trimmed (so the zero polynomial is the empty list).
This is the fallback for the compiled kernels in ``_gfpoly_c``; both
expose the same functions and must stay interchangeable, see
``gfpoly``.  ``p`` is assumed prime throughout: inverses are taken as
(p-2)-th powers.
"""

from __future__ import annotations

BACKEND = "pure-python"


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul_mod_cyclic(a, b, n: int, p: int) -> list:
    """Product of ``a`` and ``b`` reduced modulo x**n - 1 over GF(p).

    Reduction modulo x**n - 1 is index wrap-around, so the product is
    accumulated straight into n slots; zero coefficients are skipped.
    """
    c = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    k = (i + j) % n
                    c[k] = (c[k] + ai * bj) % p
    return _trim(c)


def poly_pow_mod_cyclic(a, e: int, n: int, p: int) -> list:
    """``a**e`` modulo x**n - 1 over GF(p), by repeated squaring."""
    r = [1]
    b = list(a)
    while e:
        if e & 1:
            r = poly_mul_mod_cyclic(r, b, n, p)
        e >>= 1
        if e:
            b = poly_mul_mod_cyclic(b, b, n, p)
    return r


def poly_sub(a, b, p: int) -> list:
    out = []
    for i in range(max(len(a), len(b))):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out.append((ai - bi) % p)
    return _trim(out)


def poly_divmod(a, b, p: int) -> tuple[list, list]:
    """Quotient and remainder of ``a`` by nonzero ``b`` over GF(p)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim(list(a))
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(r) - db)
    while r and len(r) - 1 >= db:
        c = (r[-1] * inv) % p
        dq = len(r) - 1 - db
        q[dq] = c
        for i, bi in enumerate(b):
            if bi:
                r[dq + i] = (r[dq + i] - c * bi) % p
        _trim(r)
    return _trim(q), r


def poly_gcd(a, b, p: int) -> list:
    """Monic gcd over GF(p); the gcd with zero is the other argument."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a and a[-1] != 1:
        inv = pow(a[-1], p - 2, p)
        a = [(x * inv) % p for x in a]
    return a


def ddf_degrees(n: int, p: int) -> list[tuple[int, int]]:
    """Irreducible-factor degrees of x**n - 1 over GF(p), with counts.

    Distinct-degree splitting: at stage i, gcd(f, x**(p**i) - x) peels
    off the product of all remaining irreducible factors of degree i.
    The powers x**(p**i) are kept reduced modulo x**n - 1 by repeated
    squaring, which is enough because the running cofactor f always
    divides x**n - 1.  With p not dividing n the polynomial is
    square-free, so the degrees alone settle the factor multiset and no
    equal-degree splitting is needed.

    Returns a sorted list of (degree, count) pairs summing to n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if p < 2:
        raise ValueError(f"p must be a prime, got {p}")
    if n % p == 0:
        raise ValueError(f"{p} divides {n}: x**{n} - 1 is not square-free mod {p}")
    f = [p - 1] + [0] * (n - 1) + [1]
    h = [0, 1]
    found = []
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = poly_pow_mod_cyclic(h, p, n, p)
        g = poly_gcd(f, poly_sub(h, [0, 1], p), p)
        if len(g) > 1:
            found.append((i, (len(g) - 1) // i))
            f, rem = poly_divmod(f, g, p)
            if rem:
                raise AssertionError("stage gcd must divide the cofactor")
    if len(f) > 1:
        found.append((len(f) - 1, 1))
    return sorted(found)
