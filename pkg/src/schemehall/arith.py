"""Small number-theoretic helpers.

Everything here works on plain ints.  A "pi-number" for a set of primes
pi is a positive integer all of whose prime divisors lie in pi; 1 is a
pi-number for every pi, including the empty set.
"""
from __future__ import annotations

from collections.abc import Iterable

__all__ = [
    "is_prime",
    "prime_factors",
    "is_pi_number",
    "pi_part",
    "validate_pi",
    "format_pi",
]


def is_prime(n: int) -> bool:
    """Primality by trial division; plenty for the orders handled here."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n in increasing order."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_pi_number(n: int, pi: frozenset[int]) -> bool:
    """True when every prime divisor of n lies in pi."""
    return all(p in pi for p in prime_factors(n))


def pi_part(n: int, pi: frozenset[int]) -> int:
    """Largest divisor of n that is a pi-number."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out = 1
    for p in prime_factors(n):
        if p in pi:
            while n % p == 0:
                n //= p
                out *= p
    return out


def validate_pi(pi: Iterable[int]) -> frozenset[int]:
    """Normalize a collection of primes to a frozenset, rejecting non-primes."""
    out = frozenset(pi)
    for p in out:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    return out


def format_pi(pi: frozenset[int]) -> str:
    return "{" + ",".join(str(p) for p in sorted(pi)) + "}"
