"""Exact modular arithmetic kernels on Python's arbitrary-precision integers.

These four functions carry the entire numeric load of the package: a
square-and-multiply power, a binary Jacobi symbol, the repeated-squaring
evaluation of 3^(2^z) mod m, and an order computation that exploits a known
factored bound. None of them ever materializes a full-sized power.
"""

import math

from .errors import OrderBoundError


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent reduced into [0, modulus), by square and multiply.

    One modular squaring per exponent bit, plus a multiply per set bit.

    >>> mod_pow(3, 20, 41)
    40
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    result = 1
    base %= modulus
    while exponent:
        if exponent & 1:
            result = result * base % modulus
        base = base * base % modulus
        exponent >>= 1
    return result


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd m >= 3, via the binary reduction.

    Equals the Legendre symbol when m is prime; 0 exactly when gcd(a, m) > 1.
    No primality assumption on m, which is the point: the classifier applies
    it to numbers whose primality is the question.

    >>> jacobi(3, 29)
    -1
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"m must be odd and >= 3, got {m}")
    a %= m
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                sign = -sign
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            sign = -sign
        a %= m
    return sign if m == 1 else 0


def pow3_tower(z: int, modulus: int) -> int:
    """3^(2^z) mod modulus by z successive squarings.

    The tower exponent 2^z is never expanded, so z in the thousands is fine
    as long as residues mod modulus are affordable.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if z < 0:
        raise ValueError(f"z must be >= 0, got {z}")
    r = 3 % modulus
    for _ in range(z):
        r = r * r % modulus
    return r


def mult_order_3(f: int, order_bound_p: int, order_bound_n: int) -> int:
    """Exact multiplicative order of 3 mod f, given ord | order_bound_p * 2^order_bound_n.

    order_bound_p must be 1 or prime: the routine walks the divisor lattice of
    the bound by stripping one factor of order_bound_p and then factors of 2
    while the power stays 1, which only covers composite odd parts if they are
    a single prime. The premise 3^(p*2^n) = 1 mod f is verified up front.
    """
    if f < 2:
        raise ValueError(f"f must be >= 2, got {f}")
    if math.gcd(3, f) != 1:
        raise ValueError(f"f must be coprime to 3, got {f}")
    exponent = order_bound_p << order_bound_n
    if mod_pow(3, exponent, f) != 1:
        raise OrderBoundError(
            f"3^({order_bound_p}*2^{order_bound_n}) is not 1 mod {f}; the order bound is wrong"
        )
    order = exponent
    if order_bound_p > 1 and mod_pow(3, order // order_bound_p, f) == 1:
        order //= order_bound_p
    while order % 2 == 0 and mod_pow(3, order // 2, f) == 1:
        order //= 2
    return order
