"""Exact elementary number theory used throughout the library.

Plain trial division everywhere: callers only ever ask about n up to a
few thousand, so sieves and probabilistic primality tests are
deliberately out of scope.  Everything returns exact ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _require_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class Factorization:
    """Prime decomposition as (prime, exponent) pairs, primes ascending."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = 1
        for p, a in self.pairs:
            if p <= last:
                raise ValueError("primes must be distinct and ascending")
            if a < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {a}")
            last = p

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def value(self) -> int:
        """The integer this factorization multiplies back to."""
        out = 1
        for p, a in self.pairs:
            out *= p**a
        return out


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def factorize(n: int) -> Factorization:
    """Factor n by trial division; factorize(1) is the empty product."""
    _require_positive(n)
    pairs: list[tuple[int, int]] = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            pairs.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    _require_positive(n)
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    small.extend(reversed(large))
    return small


def mobius(n: int) -> int:
    """Moebius mu: (-1)^k for squarefree n with k prime factors, else 0."""
    _require_positive(n)
    out = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1 if p == 2 else 2
    if m > 1:
        out = -out
    return out


def sigma_k(n: int, k: int) -> int:
    """Sum of d**k over the divisors d of n."""
    _require_positive(n)
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    out = 1
    for p, a in factorize(n).pairs:
        out *= sum(p ** (k * j) for j in range(a + 1))
    return out


def euler_phi(n: int) -> int:
    """Euler totient."""
    _require_positive(n)
    out = n
    for p, _ in factorize(n).pairs:
        out = out // p * (p - 1)
    return out


@dataclass(frozen=True)
class PrimeSet:
    """A finite or cofinite set of primes.

    With ``cofinite=False`` the set is exactly ``primes``; with
    ``cofinite=True`` it is every prime *except* ``primes``.  The listed
    primes are kept sorted, so equal sets compare equal.
    """

    cofinite: bool
    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        last = 1
        for p in self.primes:
            if p <= last:
                raise ValueError("listed primes must be distinct and ascending")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p

    @classmethod
    def finite(cls, primes: Iterable[int] = ()) -> "PrimeSet":
        return cls(False, tuple(sorted(set(primes))))

    @classmethod
    def all_except(cls, excluded: Iterable[int] = ()) -> "PrimeSet":
        """The cofinite set of all primes outside ``excluded``."""
        return cls(True, tuple(sorted(set(excluded))))

    def complement(self) -> "PrimeSet":
        return PrimeSet(not self.cofinite, self.primes)

    def contains(self, p: int) -> bool:
        if not self.cofinite:
            return p in self.primes
        return is_prime(p) and p not in self.primes

    def divides_any(self, n: int) -> bool:
        """True when some prime in the set divides n."""
        _require_positive(n)
        if not self.cofinite:
            return any(n % p == 0 for p in self.primes)
        return any(p not in self.primes for p in factorize(n).primes)


def part(n: int, s: PrimeSet) -> int:
    """Largest divisor of n whose prime factors all lie in s.

    For a finite s this never factors n, so it stays cheap even when n
    is an enormous integer such as 2**200 - 1.
    """
    _require_positive(n)
    if not s.cofinite:
        out = 1
        m = n
        for p in s.primes:
            while m % p == 0:
                m //= p
                out *= p
        return out
    out = 1
    for p, a in factorize(n).pairs:
        if p not in s.primes:
            out *= p**a
    return out
