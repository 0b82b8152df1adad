import random

import pytest

from proth3 import oracle
from proth3.errors import IncompleteFactorizationError, OracleBoundError


def naive_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def brute_order(base, f):
    x, o = base % f, 1
    while x != 1:
        x = x * base % f
        o += 1
    return o


def test_is_prime_exact_exhaustive_small():
    for n in range(0, 20000):
        assert oracle.is_prime_exact(n) == naive_is_prime(n), n


def test_is_prime_exact_spot_values():
    assert oracle.is_prime_exact(41)
    assert not oracle.is_prime_exact(3281)  # 17 * 193
    assert oracle.is_prime_exact(21523361) == naive_is_prime(21523361)
    assert oracle.is_prime_exact(21523361)  # odd part of 3^16 + 1


def test_is_prime_exact_refuses_above_bound():
    with pytest.raises(OracleBoundError):
        oracle.is_prime_exact(2**64 + 1)
    assert oracle.is_prime_exact(2**64) is False  # even, still in range


def test_factorize_anchors():
    assert oracle.factorize(6562).prime_factors == ((2, 1), (17, 1), (193, 1))
    assert oracle.factorize(6562).complete
    assert oracle.factorize(82).prime_factors == ((2, 1), (41, 1))
    for p in (5, 41, 193, 21523361):
        f = oracle.factorize(p)
        assert f.prime_factors == ((p, 1),) and f.complete
    with pytest.raises(ValueError):
        oracle.factorize(1)


def test_factorize_self_consistency():
    ms = list(range(2, 3000))
    rng = random.Random(5)
    ms += [rng.randrange(2, 10**7) for _ in range(200)]
    for m in ms:
        f = oracle.factorize(m)
        assert f.complete
        assert f.product() == m
        primes = [p for p, _ in f.prime_factors]
        assert primes == sorted(primes)
        assert all(naive_is_prime(p) for p in primes)


def test_factorize_budget_partial():
    m = 1000003 * 1000033  # both prime, out of reach in 10 candidates
    f = oracle.factorize(m, budget=10)
    assert not f.complete
    assert f.prime_factors == ()
    assert m % f.product() == 0

    f = oracle.factorize(4 * m, budget=10)
    assert not f.complete
    assert f.prime_factors == ((2, 2),)
    assert (4 * m) % f.product() == 0


def test_is_primover_3_examples():
    assert oracle.is_primover_3(41)  # prime, trivially
    # ord(3) is 16 modulo 17, 193, and 3281 itself
    for d in (17, 193, 3281):
        assert brute_order(3, d) == 16
    assert oracle.is_primover_3(3281)
    # 91 = 7 * 13 with differing orders
    assert brute_order(3, 7) == 6 and brute_order(3, 13) == 3
    assert not oracle.is_primover_3(91)


def test_is_primover_3_prime_powers():
    # 121 = 11^2: ord is 5 both mod 11 and mod 121, a non-squarefree positive
    assert brute_order(3, 11) == 5 and brute_order(3, 121) == 5
    assert oracle.is_primover_3(121)
    # 25 = 5^2: ord 4 mod 5 but 20 mod 25
    assert brute_order(3, 5) == 4 and brute_order(3, 25) == 20
    assert not oracle.is_primover_3(25)


def test_is_primover_3_rejects():
    with pytest.raises(ValueError):
        oracle.is_primover_3(21)  # divisible by 3
    with pytest.raises(ValueError):
        oracle.is_primover_3(1)
    with pytest.raises(IncompleteFactorizationError):
        oracle.is_primover_3(1000003 * 1000033, budget=5)


def test_is_overpseudoprime_3():
    assert not oracle.is_overpseudoprime_3(41)  # prime
    assert oracle.is_overpseudoprime_3(3281)
    assert oracle.is_overpseudoprime_3(121)
    assert not oracle.is_overpseudoprime_3(21)  # screened: multiple of 3
    assert not oracle.is_overpseudoprime_3(91)
    assert not oracle.is_overpseudoprime_3(2)


def test_odd_divisors_of_gf3_are_primover():
    # all odd divisors > 1 of 3^(2^n) + 1 share one order of 3
    odd_parts = {1: [5], 2: [41], 3: [17, 193, 3281], 4: [21523361], 5: [926510094425921]}
    for n, divisors in odd_parts.items():
        for d in divisors:
            assert oracle.is_primover_3(d), (n, d)
