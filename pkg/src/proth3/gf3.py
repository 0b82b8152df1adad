"""Divisor machinery for GF(3, n) = 3^(2^n) + 1.

Every odd factor of GF(3, n) lies on one of two arithmetic progressions:

    form A:  k * 2^(n+1) + 1   with k odd and 3 not dividing k
    form B:  3m * 2^(n+2) + 1  with m >= 1 unrestricted

which makes trial division over those progressions dramatically sparser than
a plain wheel. The same corollary drives the divisor sieve for an ambiguous
candidate R = p*2^n + 1 that passed the base-3 Euler test and divides
GF(3, n-1): any factor of such an R has the shape k*2^n + 1.
"""

import heapq
from dataclasses import dataclass
from math import isqrt
from typing import TYPE_CHECKING, Iterator

from . import modular, oracle
from .errors import SieveContractError
from .oracle import Factorization

if TYPE_CHECKING:
    from .classify import ProthCandidate

# factor_gf3 is trial division; past n = 5 the square root of GF(3, n) walks
# out of desk range and a real factoring engine would be needed.
DEFAULT_CAP = 5


def gf3_value(n: int) -> int:
    """GF(3, n) = 3^(2^n) + 1 as an exact integer."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return 3 ** (1 << n) + 1


@dataclass(frozen=True)
class FactorForm:
    """Which progression a divisor of GF(3, n) sits on, with its witness.

    kind "A": value = witness * 2^(n+1) + 1, witness odd, not divisible by 3.
    kind "B": value = 3 * witness * 2^(n+2) + 1, witness >= 1.
    """

    n: int
    kind: str
    witness: int

    @property
    def value(self) -> int:
        if self.kind == "A":
            return self.witness * (1 << (self.n + 1)) + 1
        return 3 * self.witness * (1 << (self.n + 2)) + 1


def form_of(f: int, n: int) -> FactorForm | None:
    """Classify odd f against the two progressions for index n, or None.

    The forms are disjoint: a form-A witness is odd while (f-1) / 2^(n+1) is
    even for every form-B value, so the check order cannot matter.
    """
    if f % 2 == 0:
        raise ValueError(f"f must be odd, got {f}")
    d = f - 1
    k, rem = divmod(d, 1 << (n + 1))
    if rem == 0 and k % 2 == 1 and k % 3 != 0:
        return FactorForm(n, "A", k)
    m, rem = divmod(d, 3 << (n + 2))
    if rem == 0 and m >= 1:
        return FactorForm(n, "B", m)
    return None


def _form_a_values(n: int, limit: int) -> Iterator[int]:
    step = 1 << (n + 1)
    k = 1
    while k * step + 1 <= limit:
        if k % 3 != 0:
            yield k * step + 1
        k += 2


def _form_b_values(n: int, limit: int) -> Iterator[int]:
    step = 3 << (n + 2)
    v = step + 1
    while v <= limit:
        yield v
        v += step


def enumerate_candidates(n: int, limit: int) -> Iterator[int]:
    """Every form-A or form-B value <= limit, strictly increasing, no duplicates.

    The two streams never collide (disjointness argument in form_of), so a
    plain sorted merge is enough.
    """
    yield from heapq.merge(_form_a_values(n, limit), _form_b_values(n, limit))


def factor_gf3(n: int, budget: int | None = None, cap: int = DEFAULT_CAP) -> Factorization:
    """Factor GF(3, n) by trial division over the two progressions.

    Strips the single factor 2 (GF(3, n) = 2 mod 4 for n >= 1), then walks
    enumerate_candidates up to the square root of the odd part, at most
    budget candidates. Complete once the cofactor is 1 or certified prime.
    """
    if not 1 <= n <= cap:
        raise ValueError(f"n must be in [1, {cap}], got {n}")
    target = gf3_value(n)
    found: list[tuple[int, int]] = [(2, 1)]
    rem = target // 2
    complete = True
    tried = 0
    rem_checked = False
    for c in enumerate_candidates(n, isqrt(rem)):
        if not rem_checked:
            if rem == 1 or (rem <= oracle.EXACT_BOUND and oracle.is_prime_exact(rem)):
                break
            rem_checked = True
        if c * c > rem:
            break
        if budget is not None and tried >= budget:
            complete = False
            break
        tried += 1
        if rem % c == 0:
            e = 0
            while rem % c == 0:
                rem //= c
                e += 1
            found.append((c, e))
            rem_checked = False
    if complete and rem > 1:
        found.append((rem, 1))
    return Factorization(target, tuple(found), complete)


@dataclass(frozen=True)
class SieveOutcome:
    """Result of the corollary divisor sieve.

    status is one of "factor_found" (with the factor), "exhausted" (the
    progression passed sqrt(R), so R is prime), or "budget_spent".
    """

    status: str
    factor: int | None = None


def sieve_R(c: "ProthCandidate", budget: int | None) -> SieveOutcome:
    """Hunt for a divisor of R on the progression k*2^n + 1, k = 1, 2, ...

    Only sound for candidates inside the corollary's hypotheses, which are
    re-verified here: p > 3, n > 2, 3 does not divide R, the base-3 Euler
    test passes, and R divides GF(3, n-1). Budget counts candidates tried,
    never wall time, so verdicts are reproducible.
    """
    R, p, n = c.R, c.p, c.n
    if p <= 3:
        raise SieveContractError(f"sieve requires p > 3, got p = {p}")
    if n <= 2:
        raise SieveContractError(f"sieve requires n > 2, got n = {n}")
    if R % 3 == 0:
        raise SieveContractError(f"3 divides R = {R}; screen candidates before sieving")
    if modular.mod_pow(3, (R - 1) // 2, R) != R - 1:
        raise SieveContractError(f"R = {R} fails the base-3 Euler test")
    if modular.pow3_tower(n - 1, R) != R - 1:
        raise SieveContractError(f"R = {R} does not divide GF(3, {n - 1})")
    return _scan_progression(R, n, budget)


def _scan_progression(R: int, n: int, budget: int | None) -> SieveOutcome:
    step = 1 << n
    limit = isqrt(R)
    f = step + 1
    tried = 0
    while f <= limit:
        if budget is not None and tried >= budget:
            return SieveOutcome("budget_spent")
        tried += 1
        if R % f == 0:
            return SieveOutcome("factor_found", f)
        f += step
    return SieveOutcome("exhausted")
