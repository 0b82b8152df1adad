"""Primality classification for R = p*2^n + 1 built on one base-3 exponentiation.

A candidate failing 3^((R-1)/2) = -1 mod R is composite. A passing one is
prime unless it divides GF(3, n-1) = 3^(2^(n-1)) + 1, in which case all of
its divisors share multiplicative order 2^n and it is reported as a strong
probable prime ("primover"). Cheap closure rules (2^n > p, a magnitude bound
on p, non-divisibility of GF(3, n-1)) settle most passing candidates without
any factoring; the rest face a divisor sieve over the progression k*2^n + 1.

Companion modules factor GF(3, n) over its two divisor progressions, search
for the smallest exponent making p*2^n + 1 prime, and provide a brute-force
oracle that every verdict can be replayed against.
"""

from .classify import (
    DEFAULT_SIEVE_BUDGET,
    Evidence,
    Outcome,
    ProthCandidate,
    Verdict,
    classify,
    divides_gf3,
    euler_test,
    p3_proth,
)
from .errors import (
    AttestationError,
    DivisibleByThreeError,
    IncompleteFactorizationError,
    OracleBoundError,
    OrderBoundError,
    OutOfScopeError,
    SieveContractError,
)
from .gf3 import (
    DEFAULT_CAP,
    FactorForm,
    SieveOutcome,
    enumerate_candidates,
    factor_gf3,
    form_of,
    gf3_value,
    sieve_R,
)
from .modular import jacobi, mod_pow, mult_order_3, pow3_tower
from .oracle import (
    EXACT_BOUND,
    Factorization,
    factorize,
    is_overpseudoprime_3,
    is_prime_exact,
    is_primover_3,
)
from .search import SearchEntry, SearchReport, min_n, scan
from .verify import VerifySummary, replay

__version__ = "0.1.0"

__all__ = [
    "AttestationError",
    "DEFAULT_CAP",
    "DEFAULT_SIEVE_BUDGET",
    "DivisibleByThreeError",
    "EXACT_BOUND",
    "Evidence",
    "FactorForm",
    "Factorization",
    "IncompleteFactorizationError",
    "OracleBoundError",
    "OrderBoundError",
    "OutOfScopeError",
    "Outcome",
    "ProthCandidate",
    "SearchEntry",
    "SearchReport",
    "SieveContractError",
    "SieveOutcome",
    "Verdict",
    "VerifySummary",
    "classify",
    "divides_gf3",
    "enumerate_candidates",
    "euler_test",
    "factor_gf3",
    "factorize",
    "form_of",
    "gf3_value",
    "is_overpseudoprime_3",
    "is_prime_exact",
    "is_primover_3",
    "jacobi",
    "min_n",
    "mod_pow",
    "mult_order_3",
    "p3_proth",
    "pow3_tower",
    "replay",
    "scan",
    "sieve_R",
]
