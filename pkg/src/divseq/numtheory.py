"""Divisor combinatorics for sequence indices.

Factorization is plain trial division; indices in this package stay small
(a few thousand at most), where that is instant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError


@dataclass(frozen=True)
class Factorization:
    """n together with its prime factorization as (prime, exponent) pairs
    in increasing prime order; n == 1 has no factors."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _check_index(n) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise UsageError(f"positive integer required, got {n!r}")
    return n


def factorize(n: int) -> Factorization:
    m = _check_index(n)
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, a in factorize(n).factors:
        divs = [d * p ** k for d in divs for k in range(a + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    """0 when n has a squared prime factor, else (-1)**(number of primes)."""
    f = factorize(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(n: int) -> int:
    """Count of integers in 1..n coprime to n."""
    out = _check_index(n)
    for p, _ in factorize(n).factors:
        out = out // p * (p - 1)
    return out
