"""Exception types shared across the package.

Everything derives from ValueError so callers (and the CLI) can treat any of
them as a contract violation without enumerating the zoo.
"""


class OrderBoundError(ValueError):
    """The claimed order bound is wrong: 3^(p*2^n) is not 1 modulo f."""


class DivisibleByThreeError(ValueError):
    """R is a multiple of 3; the base-3 Euler test is meaningless for it."""


class OutOfScopeError(ValueError):
    """The operation is defined only for n >= 2; n = 1 goes through the oracle."""


class SieveContractError(ValueError):
    """sieve_R was called on a candidate that fails its entry conditions."""


class AttestationError(ValueError):
    """p exceeds the oracle's exact range and no primality attestation was given."""


class OracleBoundError(ValueError):
    """The oracle refuses queries above its exact bound rather than guessing."""


class IncompleteFactorizationError(ValueError):
    """A predicate needing a complete factorization was given a partial one."""
