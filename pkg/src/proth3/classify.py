"""Classification of R = p*2^n + 1 (p odd prime, n >= 2) by the base-3 Euler test.

The whole decision procedure rests on one fact: when 3 does not divide R,

    3^((R-1)/2) = -1 mod R   iff   R is prime, or R divides GF(3, n-1) and
                                   every divisor of R shares multiplicative
                                   order 2^n for base 3 ("primover").

A failing candidate is therefore composite outright. A passing one is prime
as soon as any of the cheap closure conditions holds (2^n > p, p larger than
(3^(2^n)+1)/2, or R not dividing GF(3, n-1)); otherwise only a divisor sieve
can separate prime from overpseudoprime, and an exhausted budget leaves the
honest answer "primover": a probable prime, not a proof.
"""

from dataclasses import dataclass
from enum import Enum

from . import gf3, modular, oracle
from .errors import AttestationError, DivisibleByThreeError, OutOfScopeError


class Outcome(Enum):
    COMPOSITE = "composite"
    PRIME = "prime"
    PRIMOVER = "primover"


class Evidence(Enum):
    DIVISIBLE_BY_THREE = "divisible_by_three"
    EULER_WITNESS = "euler_witness"
    PROTH_BOUND = "proth_bound"
    MAGNITUDE_BOUND = "magnitude_bound"
    NON_DIVISOR_OF_GF = "non_divisor_of_gf"
    SIEVE_EXHAUSTED = "sieve_exhausted"
    SIEVE_FACTOR_FOUND = "sieve_factor_found"
    GF_DIVISOR_UNRESOLVED = "gf_divisor_unresolved"


_COMPOSITE_EVIDENCE = frozenset(
    {Evidence.DIVISIBLE_BY_THREE, Evidence.EULER_WITNESS, Evidence.SIEVE_FACTOR_FOUND}
)
_PRIME_EVIDENCE = frozenset(
    {
        Evidence.PROTH_BOUND,
        Evidence.MAGNITUDE_BOUND,
        Evidence.NON_DIVISOR_OF_GF,
        Evidence.SIEVE_EXHAUSTED,
    }
)

DEFAULT_SIEVE_BUDGET = 10**6


def _validate_p(p: int, attested: bool) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if p <= oracle.EXACT_BOUND:
        if not oracle.is_prime_exact(p):
            raise ValueError(f"p must be prime, got composite {p}")
    elif not attested:
        raise AttestationError(
            f"p = {p} exceeds the oracle's exact range; construct with attested=True "
            "only if its primality is established elsewhere"
        )


@dataclass(frozen=True)
class ProthCandidate:
    """The triple (p, n, R = p*2^n + 1), validated at construction.

    p is checked prime against the oracle when it is in exact range; beyond
    that the caller must pass attested=True, because a composite p silently
    invalidates every verdict downstream.
    """

    p: int
    n: int
    attested: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        _validate_p(self.p, self.attested)

    @property
    def R(self) -> int:
        return (self.p << self.n) + 1


@dataclass(frozen=True)
class Verdict:
    """Classification outcome plus the evidence that produced it.

    factor is set exactly for SIEVE_FACTOR_FOUND. passed_euler records whether
    the Euler-criterion exponentiation came out -1 (base 3 everywhere except
    the p = 3 route, which uses the smallest nonresidue base instead).
    """

    outcome: Outcome
    evidence: Evidence
    passed_euler: bool
    factor: int | None = None

    def __post_init__(self):
        if self.outcome is Outcome.COMPOSITE:
            ok = self.evidence in _COMPOSITE_EVIDENCE
        elif self.outcome is Outcome.PRIME:
            ok = self.evidence in _PRIME_EVIDENCE
        else:
            ok = self.evidence is Evidence.GF_DIVISOR_UNRESOLVED and self.passed_euler
        if not ok:
            raise ValueError(f"evidence {self.evidence} cannot support {self.outcome}")
        if (self.factor is not None) != (self.evidence is Evidence.SIEVE_FACTOR_FOUND):
            raise ValueError("factor is carried by SIEVE_FACTOR_FOUND evidence only")


def _screen(c: ProthCandidate) -> None:
    if c.n < 2:
        raise OutOfScopeError(
            f"n = {c.n} is out of scope here; decide 2p + 1 with the oracle instead"
        )
    if c.R % 3 == 0:
        raise DivisibleByThreeError(f"3 divides R = {c.R}; the base-3 test says nothing")


def euler_test(c: ProthCandidate) -> bool:
    """True iff 3^((R-1)/2) = R - 1 mod R. Requires n >= 2 and 3 not dividing R."""
    _screen(c)
    R = c.R
    return modular.mod_pow(3, (R - 1) // 2, R) == R - 1


def divides_gf3(c: ProthCandidate) -> bool:
    """True iff R divides GF(3, n-1), i.e. 3^(2^(n-1)) = -1 mod R."""
    _screen(c)
    R = c.R
    return modular.pow3_tower(c.n - 1, R) == R - 1


def _magnitude_bound_holds(p: int, n: int) -> bool:
    """p > (3^(2^n) + 1) / 2, without building 3^(2^n) unless it could matter.

    bitlen(p) < floor(1.58 * 2^n) already forces p < 3^(2^n) / 2 since
    log2(3) > 1.58, so the big power is constructed only for tiny n or for a
    p large enough to stand a chance.
    """
    two_n = 1 << n
    if two_n > 64 and p.bit_length() < (79 * two_n) // 50:
        return False
    return 2 * p > 3**two_n + 1


def classify(c: ProthCandidate, sieve_budget: int = DEFAULT_SIEVE_BUDGET) -> Verdict:
    """Full decision procedure, cheapest checks first.

    Order: 3 | R screen, base-3 Euler test, Proth bound (2^n > p), magnitude
    bound (p > (3^(2^n)+1)/2), GF(3, n-1) divisibility, then the corollary
    divisor sieve under sieve_budget. p = 3 never reaches the base-3 test:
    R = 3*2^n + 1 is 1 mod 3, which breaks the nonresidue argument, so those
    candidates route through p3_proth with a different base.
    """
    if c.n < 2:
        raise OutOfScopeError(
            f"n = {c.n} is out of scope here; decide 2p + 1 with the oracle instead"
        )
    if c.p == 3:
        return p3_proth(c.n)
    R = c.R
    if R % 3 == 0:
        return Verdict(Outcome.COMPOSITE, Evidence.DIVISIBLE_BY_THREE, passed_euler=False)
    if not euler_test(c):
        return Verdict(Outcome.COMPOSITE, Evidence.EULER_WITNESS, passed_euler=False)
    if (1 << c.n) > c.p:
        return Verdict(Outcome.PRIME, Evidence.PROTH_BOUND, passed_euler=True)
    if _magnitude_bound_holds(c.p, c.n):
        return Verdict(Outcome.PRIME, Evidence.MAGNITUDE_BOUND, passed_euler=True)
    if not divides_gf3(c):
        return Verdict(Outcome.PRIME, Evidence.NON_DIVISOR_OF_GF, passed_euler=True)
    if c.n == 2:
        # Corollary sieve needs n > 2; a passing GF divisor stays unresolved.
        return Verdict(Outcome.PRIMOVER, Evidence.GF_DIVISOR_UNRESOLVED, passed_euler=True)
    outcome = gf3.sieve_R(c, sieve_budget)
    if outcome.status == "factor_found":
        return Verdict(
            Outcome.COMPOSITE,
            Evidence.SIEVE_FACTOR_FOUND,
            passed_euler=True,
            factor=outcome.factor,
        )
    if outcome.status == "exhausted":
        return Verdict(Outcome.PRIME, Evidence.SIEVE_EXHAUSTED, passed_euler=True)
    return Verdict(Outcome.PRIMOVER, Evidence.GF_DIVISOR_UNRESOLVED, passed_euler=True)


def _smallest_nonresidue(R: int) -> int:
    """Smallest a >= 2 with jacobi(a, R) != +1.

    For prime R this is a true nonresidue. Accepting jacobi = 0 as well keeps
    the scan finite for composite R (a perfect square has no -1 witness at
    all; the first prime factor yields 0 instead), and the Euler check still
    fails there: a power of a number sharing a factor with R can never be
    R - 1 mod R.
    """
    a = 2
    while modular.jacobi(a, R) == 1:
        a += 1
    return a


def p3_proth(n: int) -> Verdict:
    """Classical Proth verdict for R = 3*2^n + 1, n >= 2.

    2^n > 3 always holds, so a passing Euler exponentiation at a nonresidue
    base proves primality outright. Base 3 is never chosen: jacobi(3, R) = +1
    for every R = 1 mod 3 here.
    """
    if n < 2:
        raise OutOfScopeError(f"p3_proth requires n >= 2, got {n}")
    R = 3 * (1 << n) + 1
    a = _smallest_nonresidue(R)
    if modular.mod_pow(a, (R - 1) // 2, R) == R - 1:
        return Verdict(Outcome.PRIME, Evidence.PROTH_BOUND, passed_euler=True)
    return Verdict(Outcome.COMPOSITE, Evidence.EULER_WITNESS, passed_euler=False)
