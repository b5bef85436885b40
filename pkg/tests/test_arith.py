import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minhamming.arith import (
    DOUBLING_ORDER_LIMIT,
    dedekind_psi,
    euler_phi,
    factorize,
    hamming_weight,
    is_prime,
    mersenne_exponent,
    mobius,
    mul_order2,
    odd_part,
    omega,
    order_is_even,
    primes_up_to,
    v_p,
    wieferich_exponent,
)


def brute_order(n):
    k, w = 1, 2 % n
    while w != 1 % n:
        w = w * 2 % n
        k += 1
    return k


def naive_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


@pytest.mark.parametrize("n, w", [(7, 3), (0, 0), (1, 1), (2023, 9), (2**40, 1)])
def test_hamming_weight(n, w):
    assert hamming_weight(n) == w


@given(st.integers(0, 2**64 - 1), st.integers(0, 2**64 - 1))
def test_weight_subadditive(a, b):
    assert hamming_weight(a) + hamming_weight(b) >= hamming_weight(a + b)


@pytest.mark.parametrize("n, expected", [(12, (3, 2)), (7, (7, 0)), (2**18, (1, 18))])
def test_odd_part(n, expected):
    assert odd_part(n) == expected


def test_odd_part_rejects_zero():
    with pytest.raises(ValueError):
        odd_part(0)


@pytest.mark.parametrize("n, p", [(31, 5), (12, None), (1, 1), (2**61 - 1, 61), (2**61, None)])
def test_mersenne_exponent(n, p):
    assert mersenne_exponent(n) == p


def test_mul_order2_examples():
    assert mul_order2(7).order == 3
    assert mul_order2(1).order == 1
    assert mul_order2(2023).order == brute_order(2023) == 408


def test_mul_order2_rejects_even():
    with pytest.raises(ValueError):
        mul_order2(10)


def test_order_properties_small():
    for n in range(1, 10_001, 2):
        order = mul_order2(n).order
        assert pow(2, order, n) == 1 % n
        assert euler_phi(n) % order == 0
        for q, _ in factorize(order).factors:
            assert pow(2, order // q, n) != 1 % n


def test_order_both_methods_agree_across_threshold():
    lo = DOUBLING_ORDER_LIMIT - 200
    for n in range(lo | 1, DOUBLING_ORDER_LIMIT + 2000, 2):
        assert mul_order2(n).order == brute_order(n)


def test_factorize_examples():
    assert factorize(2023).factors == ((7, 1), (17, 2))
    assert factorize(1).factors == ()
    assert factorize(2**18).factors == ((2, 18),)
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(2**64)


def test_factorize_small_range():
    for n in range(1, 10_001):
        fac = factorize(n)
        assert math.prod(p**e for p, e in fac.factors) == n
        assert omega(n) == len(fac.factors)
        assert all(naive_is_prime(p) for p, _ in fac.factors)


def test_factorize_64_bit():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randrange(2, 2**64)
        fac = factorize(n)
        assert math.prod(p**e for p, e in fac.factors) == n
        assert all(is_prime(p) for p, _ in fac.factors)
    # semiprime with both factors above the trial-division bound
    assert factorize(1000000007 * 998244353).factors == ((998244353, 1), (1000000007, 1))
    assert factorize(4294967291**2).factors == ((4294967291, 2),)


def test_is_prime_matches_naive():
    for n in range(0, 20_000):
        assert is_prime(n) == naive_is_prime(n)
    # strong pseudoprimes to several small bases
    assert not is_prime(3215031751)
    assert not is_prime(3825123056546413051)
    assert is_prime(2**61 - 1)


def test_multiplicative_functions():
    assert euler_phi(7) == 6
    assert mobius(12) == 0 and mobius(6) == 1 and mobius(30) == -1
    assert dedekind_psi(6) == 12
    assert euler_phi(1) == 1 and mobius(1) == 1 and dedekind_psi(1) == 1
    for n in range(1, 500):
        assert euler_phi(n) == sum(math.gcd(k, n) == 1 for k in range(1, n + 1))


def test_v_p():
    assert v_p(24, 2) == 3
    assert v_p(7, 3) == 0
    with pytest.raises(ValueError):
        v_p(24, 4)


def test_wieferich_exponent():
    assert wieferich_exponent(3) == 1
    assert wieferich_exponent(1093) == 2
    assert wieferich_exponent(3511) == 2
    for bad in (2, 9, 1):
        with pytest.raises(ValueError):
            wieferich_exponent(bad)


def test_no_wieferich_primes_below_5000_except_1093_and_3511():
    for p in primes_up_to(5000)[1:]:
        expected = 2 if p in (1093, 3511) else 1
        assert wieferich_exponent(p) == expected
        # agrees with v_p of the actual number for small p
        if p < 400:
            assert v_p(2 ** (p - 1) - 1, p) == expected


def test_primes_up_to():
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert primes_up_to(2) == [2]
    assert primes_up_to(10**5) == [n for n in range(10**5 + 1) if naive_is_prime(n)]
    assert len(primes_up_to(10**6)) == 78498


def test_primes_up_to_cap():
    with pytest.raises(ValueError):
        primes_up_to(10**12)


def test_order_parity_shortcut():
    for p in primes_up_to(10_000)[1:]:
        assert order_is_even(p) == (mul_order2(p).order % 2 == 0)
