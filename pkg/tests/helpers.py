"""Brute-force reference implementations shared by the tests.

Everything here recomputes results from first principles, on purpose:
loops over all pairs instead of divisor tricks, so the library's
number-theoretic shortcuts are checked against something dumber.
"""

from math import gcd
from random import Random

from orbitkit import Sequence, View


def divisors_brute(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius_brute(n):
    if n == 1:
        return 1
    count = 0
    for p in range(2, n + 1):
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            count += 1
    return -1 if count % 2 else 1


def sigma_brute(n, k):
    return sum(d**k for d in divisors_brute(n))


def phi_brute(n):
    return sum(1 for m in range(1, n + 1) if gcd(m, n) == 1)


def fix_from_orbit_brute(o: Sequence):
    """F(n) = sum of d * o(d) over divisors d of n."""
    return [
        sum(d * o[d] for d in divisors_brute(n))
        for n in range(1, len(o) + 1)
    ]


def product_brute(u: Sequence, v: Sequence):
    """Orbit counts of the product, straight from the lcm double sum."""
    n_out = min(len(u), len(v))
    out = [0] * n_out
    for d1 in range(1, len(u) + 1):
        for d2 in range(1, len(v) + 1):
            m = d1 * d2 // gcd(d1, d2)
            if m <= n_out:
                out[m - 1] += u[d1] * v[d2] * gcd(d1, d2)
    return out


def iterate_brute(o: Sequence, k: int):
    """Orbit counts of T^k via fix counts: F_{T^k}(n) = F_T(kn)."""
    fix = fix_from_orbit_brute(o)
    n_out = len(o) // k
    out = []
    for n in range(1, n_out + 1):
        total = 0
        for d in divisors_brute(n):
            total += mobius_brute(n // d) * fix[k * d - 1]
        assert total % n == 0
        out.append(total // n)
    return out


def random_orbit(rng: Random, n: int, max_term: int) -> Sequence:
    return Sequence(View.ORBIT, tuple(rng.randint(0, max_term) for _ in range(n)))
