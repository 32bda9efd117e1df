"""Prime tables, factorization, and the arithmetic functions Omega, P+, squarefree.

Primes are indexed 1-based (prime(1) == 2) so that variable j of a lifted
polynomial corresponds to the j-th prime.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import isqrt, log

import numpy as np

from .errors import DomainError, ResourceBudgetError

SIEVE_CAP = 10**8


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit``, ascending."""

    limit: int
    primes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.primes)

    def prime(self, j: int) -> int:
        """The j-th prime, 1-based: prime(1) == 2."""
        if j < 1 or j > len(self.primes):
            raise DomainError(f"prime index {j} outside table (1..{len(self.primes)})")
        return self.primes[j - 1]

    def pi(self, x: float) -> int:
        """Number of primes <= x."""
        if x > self.limit:
            raise DomainError(f"pi({x}) exceeds table limit {self.limit}")
        return bisect_right(self.primes, x)

    def index(self, p: int) -> int:
        """1-based index of a prime in the table."""
        j = bisect_right(self.primes, p)
        if j == 0 or self.primes[j - 1] != p:
            raise DomainError(f"{p} is not a prime <= {self.limit}")
        return j


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization n = prod p^e with primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def omega(self) -> int:
        """Number of prime divisors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    @property
    def p_plus(self) -> int:
        """Largest prime divisor; undefined for n = 1."""
        if not self.factors:
            raise DomainError("p_plus(1) is undefined")
        return self.factors[-1][0]

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def recompose(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def primes_up_to(x: int) -> PrimeTable:
    """Sieve of Eratosthenes. Requires 2 <= x <= SIEVE_CAP."""
    x = int(x)
    if x < 2:
        raise DomainError(f"primes_up_to requires x >= 2, got {x}")
    if x > SIEVE_CAP:
        raise ResourceBudgetError(f"sieve limit {x} exceeds cap {SIEVE_CAP}")
    sieve = np.ones(x + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(x) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return PrimeTable(limit=x, primes=tuple(int(p) for p in np.flatnonzero(sieve)))


def first_primes(count: int) -> tuple[int, ...]:
    """The first ``count`` primes."""
    if count < 0:
        raise DomainError("count must be nonnegative")
    if count == 0:
        return ()
    bound = 15 if count < 6 else int(count * (log(count) + log(log(count)))) + 10
    table = primes_up_to(bound)
    while len(table) < count:
        bound *= 2
        table = primes_up_to(bound)
    return table.primes[:count]


def factorize(n: int) -> Factorization:
    """Trial-division factorization; n = 1 yields the empty product."""
    n = int(n)
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    m = n
    factors = []

    def strip(d: int) -> None:
        nonlocal m
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            factors.append((d, e))

    strip(2)
    strip(3)
    d = 5
    while d * d <= m:
        strip(d)
        strip(d + 2)
        d += 6
    if m > 1:
        factors.append((m, 1))
    return Factorization(n=n, factors=tuple(factors))


def omega(n: int) -> int:
    return factorize(n).omega


def p_plus(n: int) -> int:
    if n < 2:
        raise DomainError(f"p_plus requires n >= 2, got {n}")
    return factorize(n).p_plus


def is_squarefree(n: int) -> bool:
    return factorize(n).is_squarefree
