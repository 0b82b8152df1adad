"""Replay the classifier against the brute-force oracle over a whole grid.

For every candidate R = p*2^n + 1 (p prime up to p_max, 2 <= n <= n_max,
R below r_max) this checks, with zero tolerance:

  - soundness: a Prime verdict only for oracle primes, Composite only for
    oracle composites, and Primover only with the Euler test passed and R
    dividing GF(3, n-1);
  - the Euler equivalence (p > 3, 3 not dividing R): the test passes exactly
    when R is prime or R divides GF(3, n-1) and is primover;
  - the residue laws: 3 | R, or R = 2 mod 3 with jacobi(3, R) = -1;
  - the divisor shape for any composite that passes the test: every prime
    factor is 1 mod 2^n with multiplicative order of 3 equal to 2^n.

Discrepancies are collected as strings, one per failed check.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import modular, oracle
from .classify import (
    DEFAULT_SIEVE_BUDGET,
    Outcome,
    ProthCandidate,
    classify,
    divides_gf3,
    euler_test,
)

DEFAULT_R_MAX = 2**40


@dataclass
class VerifySummary:
    candidates: int = 0
    oracle_primes: int = 0
    oracle_composites: int = 0
    primover_verdicts: int = 0
    euler_passing_composites: int = 0
    discrepancies: list[str] = field(default_factory=list)

    def merge(self, other: "VerifySummary") -> None:
        self.candidates += other.candidates
        self.oracle_primes += other.oracle_primes
        self.oracle_composites += other.oracle_composites
        self.primover_verdicts += other.primover_verdicts
        self.euler_passing_composites += other.euler_passing_composites
        self.discrepancies.extend(other.discrepancies)


def _check_euler_composite(s: VerifySummary, c: ProthCandidate) -> None:
    # Composite survivor of the Euler test: its factors must sit on the
    # k*2^n + 1 progression and all share order 2^n.
    s.euler_passing_composites += 1
    R, p, n = c.R, c.p, c.n
    if not divides_gf3(c):
        s.discrepancies.append(f"p={p} n={n}: euler-passing composite outside GF(3,{n-1})")
    if not oracle.is_primover_3(R):
        s.discrepancies.append(f"p={p} n={n}: euler-passing composite not primover")
    for f, _ in oracle.factorize(R).prime_factors:
        if f % (1 << n) != 1:
            s.discrepancies.append(f"p={p} n={n}: factor {f} not 1 mod 2^{n}")
        elif modular.mult_order_3(f, p, n) != 1 << n:
            s.discrepancies.append(f"p={p} n={n}: factor {f} order differs from 2^{n}")


def _replay_one_p(p: int, n_max: int, sieve_budget: int, r_max: int) -> VerifySummary:
    s = VerifySummary()
    for n in range(2, n_max + 1):
        c = ProthCandidate(p, n)
        R = c.R
        if R >= r_max:
            break
        s.candidates += 1
        oracle_prime = oracle.is_prime_exact(R)
        if oracle_prime:
            s.oracle_primes += 1
        else:
            s.oracle_composites += 1

        v = classify(c, sieve_budget)
        if v.outcome is Outcome.PRIME and not oracle_prime:
            s.discrepancies.append(f"p={p} n={n}: verdict prime, oracle composite")
        elif v.outcome is Outcome.COMPOSITE and oracle_prime:
            s.discrepancies.append(f"p={p} n={n}: verdict composite, oracle prime")
        elif v.outcome is Outcome.PRIMOVER:
            s.primover_verdicts += 1
            if not (v.passed_euler and divides_gf3(c)):
                s.discrepancies.append(f"p={p} n={n}: primover verdict without GF divisor")

        if p == 3 or R % 3 == 0:
            continue

        # residue laws
        if R % 3 != 2:
            s.discrepancies.append(f"p={p} n={n}: R not 2 mod 3 yet coprime to 3")
        if modular.jacobi(3, R) != -1:
            s.discrepancies.append(f"p={p} n={n}: jacobi(3, R) is not -1")

        # Euler equivalence
        euler = euler_test(c)
        if oracle_prime:
            rhs = True
        else:
            rhs = divides_gf3(c) and oracle.is_primover_3(R)
        if euler != rhs:
            s.discrepancies.append(
                f"p={p} n={n}: euler={euler} but prime-or-GF-primover={rhs}"
            )
        if euler and not oracle_prime:
            _check_euler_composite(s, c)
    return s


def _replay_task(args: tuple) -> VerifySummary:
    return _replay_one_p(*args)


def replay(
    p_max: int,
    n_max: int,
    sieve_budget: int = DEFAULT_SIEVE_BUDGET,
    workers: int = 1,
    r_max: int = DEFAULT_R_MAX,
) -> VerifySummary:
    """Run every suite over all primes p <= p_max; zero discrepancies is a pass."""
    if p_max < 3 or n_max < 2:
        raise ValueError("need p_max >= 3 and n_max >= 2")
    primes = [p for p in range(3, p_max + 1, 2) if oracle.is_prime_exact(p)]
    tasks = [(p, n_max, sieve_budget, r_max) for p in primes]
    total = VerifySummary()
    if workers == 1 or len(tasks) <= 1:
        for t in tasks:
            total.merge(_replay_task(t))
        return total
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_replay_task, tasks):
            total.merge(part)
    return total
