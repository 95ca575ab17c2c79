import math

import pytest

from cleanring.arith import (
    Factorization,
    coprime_part,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    is_primitive_root,
    legendre,
    mult_order,
)

PRIMES_BELOW_100 = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
]


def naive_mult_order(a, n):
    # brute-force oracle: iterate powers one at a time
    if n == 1:
        return 1
    x = a % n
    k = 1
    while x != 1:
        x = x * a % n
        k += 1
    return k


class TestIsPrime:
    def test_against_known_list(self):
        assert [p for p in range(100) if is_prime(p)] == PRIMES_BELOW_100

    def test_square_of_prime(self):
        assert not is_prime(49)
        assert not is_prime(2209)  # 47**2

    def test_negative_and_edge(self):
        for n in (-7, -1, 0, 1):
            assert not is_prime(n)


class TestFactorize:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (147, ((3, 1), (7, 2))),
            (1, ()),
            (33, ((3, 1), (11, 1))),
            (1024, ((2, 10),)),
        ],
    )
    def test_examples(self, n, expected):
        assert factorize(n).factors == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(-12)

    def test_roundtrip(self):
        for n in range(1, 500):
            f = factorize(n)
            assert f.value == n
            assert math.prod(p**k for p, k in f.factors) == n

    def test_primes_increasing_and_prime(self):
        for n in (360, 9699690, 104729):
            fs = factorize(n).factors
            assert all(is_prime(p) for p, _ in fs)
            assert all(fs[i][0] < fs[i + 1][0] for i in range(len(fs) - 1))

    def test_invalid_handmade_factorization(self):
        with pytest.raises(ValueError):
            Factorization(6, ((3, 1), (2, 1)))  # wrong order
        with pytest.raises(ValueError):
            Factorization(12, ((2, 1), (3, 1)))  # wrong product
        with pytest.raises(ValueError):
            Factorization(4, ((4, 1),))  # composite entry


class TestEulerPhi:
    @pytest.mark.parametrize("n,expected", [(3, 2), (49, 42), (1, 1), (12, 4)])
    def test_examples(self, n, expected):
        assert euler_phi(n) == expected

    def test_brute_force_small(self):
        for n in range(1, 200):
            count = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
            assert euler_phi(n) == count


class TestDivisors:
    @pytest.mark.parametrize(
        "n,expected",
        [(12, (1, 2, 3, 4, 6, 12)), (33, (1, 3, 11, 33)), (1, (1,))],
    )
    def test_examples(self, n, expected):
        assert divisors(n) == expected

    def test_sorted_and_complete(self):
        for n in range(1, 300):
            ds = divisors(n)
            assert list(ds) == sorted(ds)
            assert ds == tuple(d for d in range(1, n + 1) if n % d == 0)


class TestMultOrder:
    @pytest.mark.parametrize("a,n,expected", [(23, 7, 3), (23, 49, 21), (5, 1, 1)])
    def test_examples(self, a, n, expected):
        assert mult_order(a, n) == expected

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            mult_order(6, 9)
        with pytest.raises(ValueError):
            mult_order(0, 4)

    def test_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            mult_order(2, 0)

    def test_against_naive_oracle(self):
        for n in range(1, 80):
            for a in range(1, n + 2):
                if math.gcd(a, n) == 1:
                    assert mult_order(a, n) == naive_mult_order(a, n)

    def test_negative_base(self):
        assert mult_order(-1, 5) == mult_order(4, 5) == 2


class TestOrderIdentities:
    # grid versions of the lcm and sandwich identities for orders
    def test_order_sandwich(self):
        for a in (2, 3, 5, 7, 11):
            for n in range(1, 25):
                for n1 in range(1, 25):
                    if math.gcd(a, n * n1) != 1:
                        continue
                    lo = mult_order(a, n)
                    hi = mult_order(a, n * n1)
                    assert lo <= hi <= n1 * lo

    def test_order_lcm_identity(self):
        for a in (2, 3, 5, 7, 11):
            for n in range(1, 25):
                for n1 in range(1, 25):
                    if math.gcd(a, n) != 1 or math.gcd(a, n1) != 1:
                        continue
                    lhs = math.lcm(mult_order(a, n), mult_order(a, n1))
                    assert lhs == mult_order(a, math.lcm(n, n1))


class TestPrimitiveRoot:
    def test_two_mod_eleven_brute_force(self):
        seen = {pow(2, k, 11) for k in range(1, 11)}
        assert seen == set(range(1, 11))
        assert is_primitive_root(2, 11)

    def test_examples(self):
        assert is_primitive_root(23, 3)
        assert not is_primitive_root(7, 3)

    def test_no_primitive_root_mod_fifteen(self):
        assert not any(
            is_primitive_root(a, 15) for a in range(1, 15) if math.gcd(a, 15) == 1
        )


class TestCoprimePart:
    @pytest.mark.parametrize("n,p,expected", [(12, 2, 3), (147, 23, 147), (8, 2, 1)])
    def test_examples(self, n, p, expected):
        assert coprime_part(n, p) == expected

    def test_rejects_composite_p(self):
        with pytest.raises(ValueError):
            coprime_part(12, 6)

    def test_result_coprime(self):
        for n in range(1, 100):
            for p in (2, 3, 5, 7):
                r = coprime_part(n, p)
                assert n % r == 0 and r % p != 0


class TestLegendre:
    @pytest.mark.parametrize("a,p,expected", [(-8, 3, 1), (12, 11, 1), (3, 3, 0)])
    def test_examples(self, a, p, expected):
        assert legendre(a, p) == expected

    def test_rejects_two_and_composite(self):
        with pytest.raises(ValueError):
            legendre(3, 2)
        with pytest.raises(ValueError):
            legendre(3, 15)

    def test_euler_criterion(self):
        for p in PRIMES_BELOW_100[1:]:
            for a in range(p):
                assert legendre(a, p) % p == pow(a, (p - 1) // 2, p)

    def test_against_square_counting(self):
        for p in (3, 5, 7, 11, 13):
            squares = {pow(x, 2, p) for x in range(1, p)}
            for a in range(1, p):
                assert legendre(a, p) == (1 if a in squares else -1)
