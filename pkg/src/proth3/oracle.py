"""Brute-force ground truth: exact primality, trial-division factorization,
and the shared-order predicates used to validate the classifier.

Deliberately independent of modular.py: everything here runs on the
interpreter's built-in pow plus plain division, so a bug in the
square-and-multiply kernels cannot hide behind a matching bug here.
"""

from dataclasses import dataclass

from .errors import IncompleteFactorizationError, OracleBoundError

# Largest m for which is_prime_exact answers unconditionally. The witness
# battery below is deterministic for everything under 2^64
# (https://miller-rabin.appspot.com/), and 2^64 itself is even.
EXACT_BOUND = 2**64

_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """Multiset of prime factors, ascending, with an explicit completeness flag.

    When complete is False a composite cofactor remains and is not listed, so
    the listed product divides the target instead of equalling it. Every
    listed prime is genuinely prime (trial division plus the exact battery).
    """

    target: int
    prime_factors: tuple[tuple[int, int], ...]
    complete: bool

    def product(self) -> int:
        out = 1
        for prime, mult in self.prime_factors:
            out *= prime**mult
        return out


def is_prime_exact(m: int) -> bool:
    """Exact primality for 2 <= m <= EXACT_BOUND; refuses anything larger."""
    if m > EXACT_BOUND:
        raise OracleBoundError(
            f"{m} exceeds the oracle's exact bound 2^64; refusing to guess"
        )
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m % p == 0:
            return m == p
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        a %= m
        if a == 0:
            continue
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def factorize(m: int, budget: int | None = None) -> Factorization:
    """Trial division by 2, 3, then the 6k+-1 wheel.

    budget caps the number of wheel candidates tried (None runs to the square
    root). The factor list is marked complete once the cofactor is 1 or passes
    the exact primality check.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    found: list[tuple[int, int]] = []

    def strip(c: int, rem: int) -> int:
        e = 0
        while rem % c == 0:
            rem //= c
            e += 1
        if e:
            found.append((c, e))
        return rem

    rem = strip(3, strip(2, m))
    complete = True
    c, step, tried = 5, 2, 0
    rem_checked = False
    while c * c <= rem:
        if not rem_checked:
            if rem <= EXACT_BOUND and is_prime_exact(rem):
                break
            rem_checked = True
        if budget is not None and tried >= budget:
            complete = False
            break
        tried += 1
        if rem % c == 0:
            rem = strip(c, rem)
            rem_checked = False
        c += step
        step = 6 - step
    if complete and rem > 1:
        found.append((rem, 1))
    return Factorization(m, tuple(found), complete)


def _order(a: int, d: int) -> int:
    """ord_d(a) for gcd(a, d) = 1 and prime-power d, built-in pow only."""
    prime = _single_prime(d)
    phi = (d // prime) * (prime - 1)
    order = phi
    for q, _ in factorize(phi).prime_factors:
        while order % q == 0 and pow(a, order // q, d) == 1:
            order //= q
    return order


def _single_prime(d: int) -> int:
    fact = factorize(d)
    assert len(fact.prime_factors) == 1, d
    return fact.prime_factors[0][0]


def _shared_order(fact: Factorization) -> bool:
    # Orders over all divisors > 1 agree iff they agree over all prime-power
    # divisors: the order over a product of coprime parts is the lcm of the
    # parts' orders.
    orders = set()
    for prime, mult in fact.prime_factors:
        for j in range(1, mult + 1):
            orders.add(_order(3, prime**j))
            if len(orders) > 1:
                return False
    return True


def _complete_factorization(m: int, budget: int | None) -> Factorization:
    fact = factorize(m, budget)
    if not fact.complete:
        raise IncompleteFactorizationError(
            f"factorization of {m} incomplete within budget; refusing to answer"
        )
    return fact


def is_primover_3(m: int, budget: int | None = None) -> bool:
    """True iff every divisor d > 1 of m has the same multiplicative order of 3.

    Holds trivially for primes; a composite satisfying it is a base-3
    overpseudoprime. Requires gcd(3, m) = 1 and a complete factorization.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if m % 3 == 0:
        raise ValueError(f"m must be coprime to 3, got {m}")
    return _shared_order(_complete_factorization(m, budget))


def is_overpseudoprime_3(m: int, budget: int | None = None) -> bool:
    """True iff m is composite and base-3 primover. Multiples of 3 screen to False."""
    if m < 2 or m % 3 == 0:
        return False
    fact = _complete_factorization(m, budget)
    composite = len(fact.prime_factors) != 1 or fact.prime_factors[0][1] != 1
    return composite and _shared_order(fact)
