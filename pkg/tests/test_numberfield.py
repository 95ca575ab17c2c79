import math

import pytest

from cleanring.arith import euler_phi, is_prime
from cleanring.numberfield import (
    CyclotomicField,
    QuadraticField,
    contains_quadratic,
    degree_adjoin,
    discriminant,
    localize,
    quadratic_real_adjoin_equal,
    real_cyclotomic_adjoin_equal,
    splitting_symbol,
)

PRIMES_200 = [p for p in range(2, 201) if is_prime(p)]
SQUARE_FREE_D = [
    d for d in range(-100, 101)
    if d not in (0, 1) and all(d % (q * q) for q in range(2, 11))
]


class TestFieldSpecs:
    def test_cyclotomic_validation(self):
        assert CyclotomicField(1).n == 1
        with pytest.raises(ValueError):
            CyclotomicField(0)

    @pytest.mark.parametrize("bad", [0, 1, 8, 12, -4, 50])
    def test_quadratic_rejects(self, bad):
        with pytest.raises(ValueError):
            QuadraticField(bad)

    def test_quadratic_accepts(self):
        for d in (-1, -2, 2, 3, 5, 33, -30):
            assert QuadraticField(d).d == d


class TestDiscriminant:
    @pytest.mark.parametrize("d,expected", [(-2, -8), (33, 33), (5, 5), (-1, -4), (3, 12), (-3, -3)])
    def test_examples(self, d, expected):
        assert discriminant(d) == expected
        assert QuadraticField(d).discriminant == expected

    def test_case_split(self):
        for d in SQUARE_FREE_D:
            delta = discriminant(d)
            assert delta == (d if d % 4 == 1 else 4 * d)


class TestSplittingSymbol:
    @pytest.mark.parametrize(
        "d,p,expected", [(-2, 3, 1), (33, 2, 1), (5, 2, -1), (-3, 2, -1), (17, 2, 1)]
    )
    def test_examples(self, d, p, expected):
        assert splitting_symbol(QuadraticField(d), p) == expected

    def test_zero_exactly_at_ramified_primes(self):
        for d in (-1, -2, -3, 2, 3, 5, 6, 33, -35):
            delta = discriminant(d)
            for p in PRIMES_200[:15]:
                symbol = splitting_symbol(QuadraticField(d), p)
                assert (symbol == 0) == (delta % p == 0)

    def test_odd_primes_match_legendre_of_discriminant(self):
        from cleanring.arith import legendre

        for d in (-5, -3, 7, 10, 33):
            for p in (3, 5, 7, 11, 13):
                assert splitting_symbol(QuadraticField(d), p) == legendre(
                    discriminant(d), p
                )


class TestLocalize:
    def test_cyclotomic_example(self):
        loc = localize(CyclotomicField(7), 23)
        assert loc.residue_degree == 3
        assert loc.norm == 23**3

    def test_quadratic_example(self):
        loc = localize(QuadraticField(-2), 3)
        assert (loc.residue_degree, loc.norm) == (1, 3)

    def test_rationals(self):
        loc = localize(CyclotomicField(1), 5)
        assert (loc.residue_degree, loc.norm) == (1, 5)

    def test_ramified_cyclotomic_prime(self):
        # p divides n: only the prime-to-p part of n matters
        loc = localize(CyclotomicField(12), 3)
        assert loc.residue_degree == 2  # order of 3 mod 4

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            localize(CyclotomicField(5), 10)

    def test_total_over_cyclotomic_grid(self):
        for n in range(1, 101):
            for p in PRIMES_200:
                loc = localize(CyclotomicField(n), p)
                assert loc.norm == p**loc.residue_degree

    def test_total_over_quadratic_grid(self):
        for d in SQUARE_FREE_D:
            for p in PRIMES_200:
                loc = localize(QuadraticField(d), p)
                assert loc.residue_degree in (1, 2)
                assert loc.norm == p**loc.residue_degree
                inert = splitting_symbol(QuadraticField(d), p) == -1
                assert (loc.residue_degree == 2) == inert


class TestDegreeAdjoin:
    def test_examples(self):
        assert degree_adjoin(CyclotomicField(7), 3) == 2
        assert degree_adjoin(QuadraticField(33), 33) == 10
        assert degree_adjoin(CyclotomicField(12), 1) == 1
        assert degree_adjoin(QuadraticField(5), 1) == 1

    def test_cyclotomic_divides_phi(self):
        for n in range(1, 40):
            field = CyclotomicField(n)
            for m in range(1, 40):
                deg = degree_adjoin(field, m)
                assert euler_phi(m) % deg == 0
                if math.gcd(m, n) == 1:
                    assert deg == euler_phi(m)

    def test_quadratic_product_identity(self):
        # [K(zeta_m):K] times [Q(zeta_m) n K : Q] is phi(m)
        for d in (-1, -2, -3, 3, 5, 6, 33):
            field = QuadraticField(d)
            for m in range(1, 80):
                deg = degree_adjoin(field, m)
                inner = 2 if (m >= 3 and contains_quadratic(d, m)) else 1
                assert deg * inner == euler_phi(m)


class TestContainsQuadratic:
    @pytest.mark.parametrize(
        "d,m,expected", [(33, 33, True), (-2, 8, True), (5, 3, False), (-1, 4, True)]
    )
    def test_examples(self, d, m, expected):
        assert contains_quadratic(d, m) is expected

    def test_divisibility_on_absolute_value(self):
        assert contains_quadratic(-3, 6)
        assert contains_quadratic(-3, 3)
        assert not contains_quadratic(-3, 4)


class TestRealAdjoinPredicates:
    @pytest.mark.parametrize(
        "m,k,expected", [(7, 21, True), (2, 100, True), (5, 4, False), (1, 9, True)]
    )
    def test_real_cyclotomic(self, m, k, expected):
        assert real_cyclotomic_adjoin_equal(m, k) is expected

    @pytest.mark.parametrize(
        "d,m,expected",
        [(-3, 6, True), (3, 12, False), (-2, 2, True), (-2, 8, True), (5, 10, False)],
    )
    def test_quadratic_real(self, d, m, expected):
        assert quadratic_real_adjoin_equal(d, m) is expected
