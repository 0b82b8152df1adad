"""Smallest-exponent search: for a prime p, the least n with p*2^n + 1 prime.

n = 1 is decided by the oracle's exact check on 2p + 1; n >= 2 goes through
the classifier. A primover verdict is a probable prime, not a proof, so by
default it is recorded and the search continues (accept_primover=True makes
it terminal for exploratory runs). A p with no prime in 1..n_max is flagged
as a survivor; proving it stays composite for every n is a different problem
entirely and out of reach here.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import oracle
from .classify import (
    DEFAULT_SIEVE_BUDGET,
    Outcome,
    ProthCandidate,
    _validate_p,
    classify,
)

# evidence tag for n = 1 entries, which never run the base-3 test
ORACLE_EVIDENCE = "oracle_exact"


@dataclass(frozen=True)
class SearchEntry:
    """One tested exponent: verdict and evidence as serialization-ready tags."""

    n: int
    R: int
    verdict: str
    evidence: str
    witness: int | None = None


@dataclass(frozen=True)
class SearchReport:
    """Outcome of min_n for one prime p.

    survivor is True exactly when min_n is None: no n <= n_max produced a
    proven prime. verdicts covers every n tried, in order, ending at min_n
    when one was found.
    """

    p: int
    n_max: int
    min_n: int | None
    R_at_min: int | None
    survivor: bool
    verdicts: tuple[SearchEntry, ...]


def min_n(
    p: int,
    n_max: int,
    sieve_budget: int = DEFAULT_SIEVE_BUDGET,
    attested: bool = False,
    accept_primover: bool = False,
) -> SearchReport:
    """Scan n = 1, 2, ... n_max in order, stopping at the first proven prime."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    _validate_p(p, attested)
    entries: list[SearchEntry] = []
    for n in range(1, n_max + 1):
        if n == 1:
            R = 2 * p + 1
            prime = oracle.is_prime_exact(R)
            entries.append(
                SearchEntry(1, R, "prime" if prime else "composite", ORACLE_EVIDENCE)
            )
            terminal = prime
        else:
            c = ProthCandidate(p, n, attested=attested)
            v = classify(c, sieve_budget)
            entries.append(
                SearchEntry(n, c.R, v.outcome.value, v.evidence.value, v.factor)
            )
            terminal = v.outcome is Outcome.PRIME or (
                accept_primover and v.outcome is Outcome.PRIMOVER
            )
        if terminal:
            return SearchReport(p, n_max, n, entries[-1].R, False, tuple(entries))
    return SearchReport(p, n_max, None, None, True, tuple(entries))


def _min_n_task(args: tuple) -> SearchReport:
    return min_n(*args)


def scan(
    p_min: int,
    p_max: int,
    n_max: int,
    sieve_budget: int = DEFAULT_SIEVE_BUDGET,
    workers: int = 1,
    accept_primover: bool = False,
) -> list[SearchReport]:
    """min_n for every odd prime in [p_min, p_max], ascending.

    Parallelism is over p (each min_n is sequential in n by nature); results
    come back in input order, so output is byte-for-byte independent of the
    worker count.
    """
    if p_min > p_max:
        raise ValueError(f"empty range [{p_min}, {p_max}]")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    primes = [
        p for p in range(max(3, p_min | 1), p_max + 1, 2) if oracle.is_prime_exact(p)
    ]
    tasks = [(p, n_max, sieve_budget, False, accept_primover) for p in primes]
    if workers == 1 or len(tasks) <= 1:
        return [_min_n_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_min_n_task, tasks))
