"""Closed-form clean and *-clean decisions for abelian group rings over
localizations of cyclotomic and quadratic rings of integers.

Every criterion depends on the group only through its exponent e.  For
a cyclotomic base with parameter n, cleanness reduces to order, totient
and gcd conditions on the prime-to-p parts of n and e.  For a quadratic
base it further splits on whether the discriminant divides the
prime-to-p part of e, and in the dividing case on the multiplicative
shape of that part; each quadratic clause carries a stable identifier
(``1a`` .. ``3d`` and friends) that ends up in the JSON and CSV output.

``oracle`` re-derives every verdict from the definitions, and the CLI
``verify`` command sweeps both for agreement, so nothing in this module
is trusted on its own.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .arith import (
    coprime_part,
    euler_phi,
    factorize,
    is_prime,
    is_primitive_root,
    mult_order,
)
from .numberfield import (
    CyclotomicField,
    Field,
    QuadraticField,
    localize,
    splitting_symbol,
)

__all__ = [
    "CleanResult",
    "Decision",
    "GroupSpec",
    "StarClean",
    "clean_cyclotomic",
    "clean_quadratic",
    "clean_rational",
    "decide",
    "field_group_algebra_star_clean",
    "star_clean_cyclotomic",
    "star_clean_quadratic",
]


class StarClean(enum.Enum):
    """Tri-state *-clean verdict.

    The *-clean criteria assume the prime does not divide the group
    exponent; inputs violating that come back OUT_OF_SCOPE rather than
    as a guess.
    """

    TRUE = "true"
    FALSE = "false"
    OUT_OF_SCOPE = "out_of_scope"

    @property
    def in_scope(self) -> bool:
        return self is not StarClean.OUT_OF_SCOPE


@dataclass(frozen=True)
class GroupSpec:
    """Finite abelian group given by its cyclic factor orders, e.g. (3, 49).

    Only the exponent (the lcm of the factors) matters to any decision;
    the empty tuple is the trivial group with exponent 1.
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(self.invariant_factors))
        if any(k < 1 for k in self.invariant_factors):
            raise ValueError("invariant factors must be positive integers")

    @classmethod
    def from_exponent(cls, e: int) -> "GroupSpec":
        return cls((e,))

    @property
    def exponent(self) -> int:
        return math.lcm(*self.invariant_factors)


class CleanResult(NamedTuple):
    """Clean flag, the clause that decided it, and all intermediates."""

    clean: bool
    clause: str
    derived: dict


@dataclass(frozen=True, eq=True)
class Decision:
    """Outcome of ``decide`` with every intermediate quantity retained.

    A true ``star_clean`` always comes with ``clean``: in a commutative
    ring with involution, *-clean elements are in particular clean.
    """

    clean: bool
    star_clean: StarClean
    matched_clause: str
    derived: dict


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _check_exponent(exp_g: int) -> None:
    if exp_g < 1:
        raise ValueError(f"group exponent must be >= 1, got {exp_g}")


def _coprime_cofactor(m: int, k: int) -> int:
    """Largest divisor of ``m`` coprime to ``k``."""
    out = 1
    for q, j in factorize(m).factors:
        if k % q:
            out *= q**j
    return out


def clean_cyclotomic(n: int, p: int, exp_g: int) -> CleanResult:
    """Cleanness of the group ring over the localization of the n-th
    cyclotomic integers at a prime above p.

    With n0 the prime-to-p part of n, n2 the prime-to-p part of the
    exponent, n1 the part of n2 coprime to n0, and
    m' = lcm(n2, n0) / (n0 n1), the ring is clean exactly when

    * p is a primitive root of n1,
    * ord(p mod n0 m') = m' * ord(p mod n0), and
    * those two orders are coprime.

    An exponent dividing n gives n1 = m' = 1 and cleanness for free.
    """
    if n < 1:
        raise ValueError(f"cyclotomic parameter must be >= 1, got {n}")
    _check_prime(p)
    _check_exponent(exp_g)
    n0 = coprime_part(n, p)
    n2 = coprime_part(exp_g, p)
    n1 = _coprime_cofactor(n2, n0)
    m_prime = math.lcm(n2, n0) // (n0 * n1)
    ord_n1 = mult_order(p, n1)
    ord_n0 = mult_order(p, n0)
    ord_n0m = mult_order(p, n0 * m_prime)
    clean = (
        ord_n1 == euler_phi(n1)
        and ord_n0m == m_prime * ord_n0
        and math.gcd(ord_n1, ord_n0m) == 1
    )
    derived = {
        "exp_g": exp_g,
        "n0": n0,
        "n2": n2,
        "n1": n1,
        "m_prime": m_prime,
        "phi_n1": euler_phi(n1),
        "ord_n1_p": ord_n1,
        "ord_n0_p": ord_n0,
        "ord_n0_mprime_p": ord_n0m,
    }
    return CleanResult(clean, "order-criterion" if clean else "none", derived)


def clean_rational(p: int, exp_g: int) -> bool:
    """Cleanness over the plain rational localization at p.

    Equivalent to p being a primitive root of the prime-to-p part of the
    exponent, and agrees with ``clean_cyclotomic(1, p, exp_g)``.
    """
    _check_prime(p)
    _check_exponent(exp_g)
    return is_primitive_root(p, coprime_part(exp_g, p))


def star_clean_cyclotomic(n: int, p: int, exp_g: int) -> StarClean:
    """Tri-state *-cleanness over the cyclotomic localization.

    In scope only when p does not divide the exponent e.  With n1 the
    part of e coprime to n0, the ring is *-clean when p is a primitive
    root of n1, 3 <= e <= 2 n1, and ord(p mod n1) is coprime to
    ord(p mod n0).  One further family lies above that bound: e = 4
    with n0 = 2 (mod 4), p = 3 (mod 4) and ord(p mod n0) odd, where the
    unit group mod 4 still matches the degree bookkeeping.
    """
    if n < 1:
        raise ValueError(f"cyclotomic parameter must be >= 1, got {n}")
    _check_prime(p)
    _check_exponent(exp_g)
    if exp_g % p == 0:
        return StarClean.OUT_OF_SCOPE
    n0 = coprime_part(n, p)
    n1 = _coprime_cofactor(exp_g, n0)
    ord_n1 = mult_order(p, n1)
    ord_n0 = mult_order(p, n0)
    ok = (
        ord_n1 == euler_phi(n1)
        and 3 <= exp_g <= 2 * n1
        and math.gcd(ord_n1, ord_n0) == 1
    ) or (
        exp_g == 4 and n0 % 4 == 2 and p % 4 == 3 and ord_n0 % 2 == 1
    )
    return StarClean.TRUE if ok else StarClean.FALSE


def _prime_power_exponent(m: int, q: int) -> int | None:
    """The l >= 1 with ``m == q**l``, or None if there is no such l."""
    l = 0
    while m % q == 0:
        m //= q
        l += 1
    return l if m == 1 and l >= 1 else None


def _two_part(n: int) -> tuple[int, int]:
    """Split ``n`` as ``2**a * odd`` and return (a, odd)."""
    a = 0
    while n % 2 == 0:
        n //= 2
        a += 1
    return a, n


def clean_quadratic(d: int, p: int, exp_g: int) -> CleanResult:
    """Cleanness over the localization of the quadratic integers of sqrt(d).

    Let n be the prime-to-p part of the exponent, D the field
    discriminant and s the splitting symbol of p.  When |D| does not
    divide n, cleanness means p is a primitive root of n and is not
    inert (clause 1a for p = 2, 1b otherwise), or n = 2 with p odd and
    inert (1c); n <= 1 with p inert is clean outright because only the
    trivial divisor is in play (clause ``n<=1-trivial``).  When |D|
    divides n, cleanness forces rigid shapes of n relative to |d|,
    checked by exact factorization (clauses 2 and 3a to 3d).  d = -1
    is the one quadratic field that is itself cyclotomic (fourth roots
    of unity), so it is decided by the cyclotomic criterion with
    parameter 4 (clause 2-gauss).
    """
    field = QuadraticField(d)
    _check_prime(p)
    _check_exponent(exp_g)
    n = coprime_part(exp_g, p)
    delta = field.discriminant
    s = splitting_symbol(field, p)
    ord_n = mult_order(p, n)
    derived = {
        "exp_g": exp_g,
        "n": n,
        "delta": delta,
        "symbol": s,
        "phi_n": euler_phi(n),
        "ord_n_p": ord_n,
    }

    if n % abs(delta):
        if n <= 1 and s == -1:
            return CleanResult(True, "n<=1-trivial", derived)
        if p == 2:
            ok = delta % 8 != 5 and is_primitive_root(2, n)
            return CleanResult(ok, "1a" if ok else "none", derived)
        if s >= 0 and is_primitive_root(p, n):
            return CleanResult(True, "1b", derived)
        if n == 2 and s == -1:
            return CleanResult(True, "1c", derived)
        return CleanResult(False, "none", derived)

    if d % 4 != 1:
        # discriminant 4d divides n, so 4 | n and p is odd
        if d == -1:
            inner = clean_cyclotomic(4, p, exp_g)
            derived.update(inner.derived)
            clause = "2-gauss" if inner.clean else "none"
            return CleanResult(inner.clean, clause, derived)
        q = abs(d)
        l = _prime_power_exponent(n // 4, q)
        if is_prime(q) and l:
            derived.update({"q": q, "l": l})
            if p % 4 == 3 and s == 1 and ord_n == euler_phi(n) // 2:
                return CleanResult(True, "2", derived)
        return CleanResult(False, "none", derived)

    # odd discriminant d itself divides n; |d| >= 3 and p never ramifies here
    twos, odd = _two_part(n)
    q = abs(d)
    if is_prime(q):
        if twos <= 1 and (l := _prime_power_exponent(odd, q)):
            derived.update({"q": q, "l": l})
            if s != 0 and ord_n == 2 * euler_phi(n) // (3 + s):
                return CleanResult(True, "3a", derived)
            if s == -1 and d < 0 and ord_n == euler_phi(n) // 2:
                return CleanResult(True, "3a", derived)
        if q % 4 == 3 and n % 4 == 0 and (l := _prime_power_exponent(n // 4, q)):
            ord_ql = mult_order(p, q**l)
            derived.update({"q": q, "l": l, "ord_q_l_p": ord_ql})
            if s == 1 and p % 4 == 3 and ord_ql == q ** (l - 1) * (q - 1) // 2:
                return CleanResult(True, "3b", derived)
        if q % 4 == 3 and twos <= 1:
            parts = factorize(odd).factors
            if len(parts) == 2 and q in (parts[0][0], parts[1][0]):
                (qa, la), (qb, lb) = parts
                q1, l1 = (qa, la) if qa == q else (qb, lb)
                q2, l2 = (qb, lb) if qa == q else (qa, la)
                half1 = q1 ** (l1 - 1) * (q1 - 1) // 2
                ord1 = mult_order(p, q1**l1)
                ord2 = mult_order(p, q2**l2)
                derived.update(
                    {"q1": q1, "l1": l1, "q2": q2, "l2": l2,
                     "ord_q1_l1_p": ord1, "ord_q2_l2_p": ord2}
                )
                if (
                    s == 1
                    and ord2 == euler_phi(q2**l2)
                    and ord1 == half1
                    and math.gcd(half1, q2 ** (l2 - 1) * (q2 - 1)) == 1
                ):
                    return CleanResult(True, "3c", derived)
    else:
        dparts = factorize(q).factors
        if len(dparts) == 2 and all(k == 1 for _, k in dparts) and twos <= 1:
            q1, q2 = dparts[0][0], dparts[1][0]
            nparts = dict(factorize(odd).factors)
            if set(nparts) == {q1, q2}:
                l1, l2 = nparts[q1], nparts[q2]
                ord1 = mult_order(p, q1**l1)
                ord2 = mult_order(p, q2**l2)
                half1 = q1 ** (l1 - 1) * (q1 - 1) // 2
                half2 = q2 ** (l2 - 1) * (q2 - 1) // 2
                derived.update(
                    {"q1": q1, "l1": l1, "q2": q2, "l2": l2,
                     "ord_q1_l1_p": ord1, "ord_q2_l2_p": ord2}
                )
                if (
                    s == 1
                    and ord1 == euler_phi(q1**l1)
                    and ord2 == euler_phi(q2**l2)
                    and math.gcd(half1, half2) == 1
                ):
                    return CleanResult(True, "3d", derived)
    return CleanResult(False, "none", derived)


def star_clean_quadratic(d: int, p: int, exp_g: int) -> StarClean:
    """Tri-state *-cleanness over the quadratic localization.

    In scope only when p does not divide the exponent.  For d > 0 it is
    cleanness plus exponent >= 3.  For d < 0 the discriminant must not
    divide the exponent, p must be a primitive root of it and must not
    be inert, again with exponent >= 3.
    """
    field = QuadraticField(d)
    _check_prime(p)
    _check_exponent(exp_g)
    if exp_g % p == 0:
        return StarClean.OUT_OF_SCOPE
    if d > 0:
        ok = exp_g >= 3 and clean_quadratic(d, p, exp_g).clean
    else:
        ok = (
            exp_g >= 3
            and exp_g % abs(field.discriminant) != 0
            and splitting_symbol(field, p) >= 0
            and is_primitive_root(p, exp_g)
        )
    return StarClean.TRUE if ok else StarClean.FALSE


def field_group_algebra_star_clean(field: Field, exp_g: int) -> bool:
    """Whether the group algebra over the field itself (no localization)
    is *-clean under the classical involution.

    Cyclotomic: exponent >= 3 and gcd(exponent, n) <= 2.  Quadratic:
    exponent >= 3 and either d > 0 or the discriminant does not divide
    the exponent.
    """
    _check_exponent(exp_g)
    if isinstance(field, CyclotomicField):
        return exp_g >= 3 and math.gcd(exp_g, field.n) <= 2
    return exp_g >= 3 and (field.d > 0 or exp_g % abs(field.discriminant) != 0)


def decide(field: Field, p: int, group: GroupSpec) -> Decision:
    """Full clean / *-clean decision for the group ring over the
    localization of the field's integers at a prime above p.

    The decision depends on ``group`` only through its exponent.
    """
    e = group.exponent
    if isinstance(field, CyclotomicField):
        result = clean_cyclotomic(field.n, p, e)
        star = star_clean_cyclotomic(field.n, p, e)
    else:
        result = clean_quadratic(field.d, p, e)
        star = star_clean_quadratic(field.d, p, e)
    loc = localize(field, p)
    derived = dict(result.derived)
    derived["f"] = loc.residue_degree
    derived["norm"] = loc.norm
    return Decision(result.clean, star, result.clause, derived)
