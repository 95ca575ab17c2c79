"""Definition-level verification of the clean and *-clean decisions.

Nothing here consults the closed-form criteria in ``decide``; every
verdict is re-derived from first principles:

* ``oracle_clean`` walks all divisors m of the prime-to-p part of the
  group exponent and compares the degree [K(zeta_m) : K] with the
  order of the local norm modulo m; the group ring is clean exactly
  when the two agree at every divisor;
* ``factor_degrees_cosets`` and ``factor_degrees_ddf`` compute the
  multiset of irreducible-factor degrees of x**n - 1 over a finite
  field by two unrelated routes (orbit counting on Z/nZ versus genuine
  distinct-degree polynomial factorization), and ``lift_degrees`` moves
  the latter from GF(p) up to the residue field GF(p**f);
* ``degree_consistency`` runs all of it at once and reports the first
  divisor where the field-side degree and the residue-side order split.

Keeping these routes independent of ``decide`` is what makes the
theorem-versus-oracle sweeps in the CLI meaningful.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from . import gfpoly
from .arith import coprime_part, divisors, euler_phi, is_prime, mult_order
from .decide import StarClean, field_group_algebra_star_clean
from .numberfield import Field, degree_adjoin, localize

__all__ = [
    "ConsistencyReport",
    "DivisorCheck",
    "PrimePoly",
    "degree_consistency",
    "factor_degrees_cosets",
    "factor_degrees_ddf",
    "lift_degrees",
    "oracle_clean",
    "oracle_star_clean",
    "total_degree",
]


@dataclass(frozen=True)
class PrimePoly:
    """Dense polynomial over GF(p): ``coefficients[i]`` multiplies x**i.

    Trailing zeros are trimmed, so the zero polynomial has no
    coefficients at all and any leading coefficient is nonzero.
    """

    p: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if any(c < 0 or c >= self.p for c in self.coefficients):
            raise ValueError("coefficients must be reduced into [0, p)")
        if self.coefficients and self.coefficients[-1] == 0:
            raise ValueError("trailing zero coefficients must be trimmed")

    @classmethod
    def from_coefficients(cls, p: int, coefficients) -> "PrimePoly":
        """Reduce arbitrary integer coefficients mod p and trim."""
        cs = [c % p for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(p, tuple(cs))

    @classmethod
    def x_pow_n_minus_one(cls, n: int, p: int) -> "PrimePoly":
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        return cls.from_coefficients(p, [-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients


def total_degree(multiset) -> int:
    """Sum of degree times multiplicity over a degree multiset."""
    return sum(e * k for e, k in multiset.items())


def factor_degrees_cosets(n: int, q: int) -> Counter:
    """Degree multiset of x**n - 1 over the q-element field, no polynomials.

    Two bookkeeping routes, cross-checked on every call: each divisor m
    of n contributes phi(m) / ord_m(q) factors of degree ord_m(q), and
    the orbits of multiplication by q on Z/nZ are counted directly.
    Orders only ever see q reduced modulo m, so q may be a huge prime
    power without cost.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if q < 2:
        raise ValueError(f"field size must be >= 2, got {q}")
    if math.gcd(n, q) != 1:
        raise ValueError(f"n and q must be coprime, got gcd({n}, {q}) > 1")
    by_divisor: Counter = Counter()
    for m in divisors(n):
        e = mult_order(q, m)
        by_divisor[e] += euler_phi(m) // e
    by_orbit: Counter = Counter()
    qn = q % n
    seen = bytearray(n)
    for r in range(n):
        if not seen[r]:
            size = 0
            s = r
            while not seen[s]:
                seen[s] = 1
                size += 1
                s = s * qn % n
            by_orbit[size] += 1
    if by_divisor != by_orbit:
        raise RuntimeError(
            f"divisor and orbit bookkeeping disagree for n={n}, q={q}: "
            f"{dict(by_divisor)} vs {dict(by_orbit)}"
        )
    return by_divisor


def factor_degrees_ddf(n: int, p: int) -> Counter:
    """Degree multiset of x**n - 1 over GF(p) by genuine polynomial work.

    Distinct-degree factorization through the ``gfpoly`` kernel; see
    ``PrimePoly`` for the coefficient convention the kernels share.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n % p == 0:
        raise ValueError(f"{p} divides {n}: x**{n} - 1 is not square-free mod {p}")
    return Counter(dict(gfpoly.ddf_degrees(n, p)))


def lift_degrees(base, f: int) -> Counter:
    """Degree multiset over GF(p**f) of factors given by degrees over GF(p).

    A degree-e irreducible splits over the extension into gcd(e, f)
    factors of degree e / gcd(e, f); the total degree is preserved.
    """
    if f < 1:
        raise ValueError(f"extension degree must be >= 1, got {f}")
    out: Counter = Counter()
    for e, k in base.items():
        g = math.gcd(e, f)
        out[e // g] += k * g
    return out


def _norm_order(p: int, f: int, m: int) -> int:
    # ord_m(p**f) from p**f reduced mod m; trivial modulus short-circuits
    if m == 1:
        return 1
    return mult_order(pow(p, f, m), m)


def oracle_clean(field: Field, p: int, exp_g: int) -> bool:
    """Divisor-by-divisor cleanness check straight from the definitions.

    Clean exactly when, for every divisor m of the prime-to-p part of
    the exponent, [K(zeta_m) : K] equals the order of the local norm
    modulo m.
    """
    if exp_g < 1:
        raise ValueError(f"group exponent must be >= 1, got {exp_g}")
    loc = localize(field, p)
    n = coprime_part(exp_g, p)
    return all(
        degree_adjoin(field, m) == _norm_order(p, loc.residue_degree, m)
        for m in divisors(n)
    )


def oracle_star_clean(field: Field, p: int, exp_g: int) -> StarClean:
    """Independent *-clean verdict: cleanness plus the field-level
    projection test, out of scope when p divides the exponent."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if exp_g < 1:
        raise ValueError(f"group exponent must be >= 1, got {exp_g}")
    if exp_g % p == 0:
        return StarClean.OUT_OF_SCOPE
    ok = oracle_clean(field, p, exp_g) and field_group_algebra_star_clean(field, exp_g)
    return StarClean.TRUE if ok else StarClean.FALSE


@dataclass(frozen=True)
class DivisorCheck:
    """One row of the divisor walk: degree expected from the field side
    versus the order of the norm in the residue side."""

    divisor: int
    totient: int
    field_degree: int
    norm_order: int


@dataclass(frozen=True)
class ConsistencyReport:
    """Structured outcome of ``degree_consistency``.

    ``passed`` is the degree-level cleanness verdict;
    ``first_divergent_divisor`` points at the smallest divisor where the
    field degree and the norm order split (None when they never do).
    The three multisets are always internally consistent or the check
    raises instead of reporting.
    """

    passed: bool
    n: int
    residue_degree: int
    first_divergent_divisor: int | None
    checks: tuple[DivisorCheck, ...]
    ddf_lifted: dict
    cosets: dict
    expected: dict


def degree_consistency(field: Field, p: int, exp_g: int) -> ConsistencyReport:
    """Cross-check every degree route against every other.

    With n the prime-to-p part of the exponent and f the residue
    degree: the distinct-degree factorization over GF(p) lifted to
    GF(p**f) must equal the coset multiset for the norm (always, or a
    RuntimeError flags an implementation bug), and the multiset
    expected from the field degrees matches exactly when the ring is
    clean, which in turn must agree with ``oracle_clean``.
    """
    loc = localize(field, p)
    n = coprime_part(exp_g, p)
    lifted = lift_degrees(factor_degrees_ddf(n, p), loc.residue_degree)
    cosets = factor_degrees_cosets(n, loc.norm)
    if lifted != cosets:
        raise RuntimeError(
            f"degree algorithms disagree for n={n}, p={p}, f={loc.residue_degree}: "
            f"{dict(lifted)} vs {dict(cosets)}"
        )
    checks = []
    expected: Counter = Counter()
    first = None
    for m in divisors(n):
        deg = degree_adjoin(field, m)
        order = _norm_order(p, loc.residue_degree, m)
        checks.append(DivisorCheck(m, euler_phi(m), deg, order))
        if euler_phi(m) % deg:
            raise RuntimeError(f"field degree {deg} does not divide phi({m})")
        expected[deg] += euler_phi(m) // deg
        if first is None and deg != order:
            first = m
    passed = first is None
    if passed != (lifted == expected):
        raise RuntimeError(
            "aggregate degree multisets disagree with the per-divisor walk"
        )
    if passed != oracle_clean(field, p, exp_g):
        raise RuntimeError("per-divisor walk disagrees with oracle_clean")
    return ConsistencyReport(
        passed=passed,
        n=n,
        residue_degree=loc.residue_degree,
        first_divergent_divisor=first,
        checks=tuple(checks),
        ddf_lifted=dict(sorted(lifted.items())),
        cosets=dict(sorted(cosets.items())),
        expected=dict(sorted(expected.items())),
    )
