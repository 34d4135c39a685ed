"""Group-order invariant: the divisibility order and the prime-valuation
distance between positive integers."""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from .errors import InputError

MAX_N = 2**63 - 1


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: dict  # prime -> exponent


def factorize(n: int) -> Factorization:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"{n!r} is not a positive integer")
    if n > MAX_N:
        raise InputError(f"{n} exceeds the 64-bit range")
    return Factorization(n=n, factors=dict(sympy.factorint(n)))


def divides(m: int, n: int) -> bool:
    if m < 1 or n < 1:
        raise InputError("divisibility is defined on positive integers")
    return n % m == 0


def order_distance(m: int, n: int) -> int:
    """Sum over primes of |v_p(m) - v_p(n)|."""
    fm = factorize(m).factors
    fn = factorize(n).factors
    return sum(abs(fm.get(p, 0) - fn.get(p, 0)) for p in set(fm) | set(fn))


def divisor_cover_neighbors(n: int, primes):
    """(above, below) neighbors of n in the divisibility cover graph:
    multiplications by the listed primes, and exact divisions."""
    if n < 1:
        raise InputError("n must be positive")
    primes = sorted(set(primes))
    for p in primes:
        if not sympy.isprime(p):
            raise InputError(f"{p} is not prime")
    above = frozenset(n * p for p in primes)
    below = frozenset(n // p for p in primes if n % p == 0)
    return above, below
