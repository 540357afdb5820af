"""Operators combining systems: product, disjoint union, iteration.

Orbit counts compose by the gcd-weighted lcm convolution
O_{TxS}(n) = sum_{lcm(d1,d2)=n} O_T(d1) O_S(d2) gcd(d1,d2); fixed
points compose pointwise.  Iteration acts on fixed points by dilation
F_{T^k}(n) = F_T(kn), and on orbit counts by the divisor sum over the
part of k supported on primes missing from n.
"""

from __future__ import annotations

from math import gcd

from .numtheory import divisors, factorize
from .sequences import Sequence, View


def product_orbits(u: Sequence, v: Sequence) -> Sequence:
    """Orbit counts of the Cartesian product, to length min(|u|, |v|)."""
    u.require_view(View.ORBIT, "product_orbits")
    v.require_view(View.ORBIT, "product_orbits")
    n_out = min(len(u), len(v))
    terms = []
    for n in range(1, n_out + 1):
        divs = divisors(n)
        total = 0
        for d1 in divs:
            a = u[d1]
            if a == 0:
                continue
            for d2 in divs:
                b = v[d2]
                if b == 0:
                    continue
                g = gcd(d1, d2)
                if d1 * d2 == n * g:  # lcm(d1, d2) == n
                    total += a * b * g
        terms.append(total)
    return Sequence(View.ORBIT, tuple(terms))


def union_orbits(u: Sequence, v: Sequence) -> Sequence:
    """Orbit counts of the disjoint union: pointwise sum."""
    u.require_view(View.ORBIT, "union_orbits")
    v.require_view(View.ORBIT, "union_orbits")
    n_out = min(len(u), len(v))
    return Sequence(
        View.ORBIT, tuple(u[n] + v[n] for n in range(1, n_out + 1))
    )


def product_fix(f: Sequence, g: Sequence) -> Sequence:
    """Fixed-point counts of the Cartesian product: pointwise product."""
    f.require_view(View.FIX, "product_fix")
    g.require_view(View.FIX, "product_fix")
    n_out = min(len(f), len(g))
    return Sequence(View.FIX, tuple(f[n] * g[n] for n in range(1, n_out + 1)))


def _check_power(k: int, available: int, op: str) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"{op} needs an integer power k >= 1, got {k!r}")
    n_out = available // k
    if n_out < 1:
        raise ValueError(
            f"{op} with k={k} needs at least {k} input terms, got {available}"
        )
    return n_out


def iterate_fix(f: Sequence, k: int) -> Sequence:
    """Fixed points of the k-th iterate: F(kn), length |f| // k."""
    f.require_view(View.FIX, "iterate_fix")
    n_out = _check_power(k, len(f), "iterate_fix")
    return Sequence(View.FIX, tuple(f[k * n] for n in range(1, n_out + 1)))


def iterate_orbits(o: Sequence, k: int) -> Sequence:
    """Orbit counts of the k-th iterate, computed directly.

    With J the primes of k missing from n and q their full contribution
    to k, the count is sum_{d | q} (k/d) * O(kn/d).  This never goes
    through fixed-point data, so it can cross-check the dilation route.
    """
    o.require_view(View.ORBIT, "iterate_orbits")
    n_out = _check_power(k, len(o), "iterate_orbits")
    k_pairs = factorize(k).pairs
    terms = []
    for n in range(1, n_out + 1):
        q = 1
        for p, a in k_pairs:
            if n % p:
                q *= p**a
        total = 0
        for d in divisors(q):
            total += (k // d) * o[k * n // d]
        terms.append(total)
    return Sequence(View.ORBIT, tuple(terms))
