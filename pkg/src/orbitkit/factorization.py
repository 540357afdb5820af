"""Search for factorizations of an orbit sequence as a product.

Given a target T, find all pairs (u, v) of nonnegative orbit sequences
with product_orbits(u, v) = T up to length N.  At index n the product
constraint is linear in the two unknowns u(n), v(n) once earlier values
are fixed, which keeps the backtracking narrow:

    T(n) - C = u(n) * B + v(n) * A + n * u(n) * v(n)

with A, B the partial fixed-point sums of u, v at n and C the portion
from strictly smaller indices.  Since A, B >= u(1), v(1) >= 1, each
candidate u(n) is bounded and determines at most one v(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .numtheory import divisors
from .sequences import Sequence, View


@dataclass(frozen=True)
class FactorPair:
    left: Sequence
    right: Sequence


@dataclass(frozen=True)
class FactorSearchResult:
    pairs: tuple[FactorPair, ...]
    truncated: bool


def factor_search(
    target: Sequence, n_terms: int | None = None, limit: int = 10_000
) -> FactorSearchResult:
    """All product factorizations of target to length n_terms.

    Pairs come out in lexicographic order of the left factor; (u, v)
    and (v, u) are both reported.  If more than ``limit`` pairs exist
    the list stops there and ``truncated`` is set.
    """
    target.require_view(View.ORBIT, "factor_search")
    n = len(target) if n_terms is None else n_terms
    if not 1 <= n <= len(target):
        raise ValueError(f"n_terms {n} outside 1..{len(target)}")
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if target[1] < 1:
        raise ValueError("target(1) must be >= 1 for any factorization to exist")

    # (d1, d2, gcd) with lcm(d1, d2) = m and both entries below m
    inner: dict[int, list[tuple[int, int, int]]] = {}
    proper: dict[int, list[int]] = {}
    for m in range(2, n + 1):
        divs = divisors(m)
        proper[m] = divs[:-1]
        inner[m] = [
            (d1, d2, gcd(d1, d2))
            for d1 in divs[:-1]
            for d2 in divs[:-1]
            if d1 * d2 == m * gcd(d1, d2)
        ]

    u = [0] * (n + 1)
    v = [0] * (n + 1)
    found: list[FactorPair] = []
    truncated = False

    def extend(m: int) -> bool:
        """Fill index m onward; returns False once the limit trips."""
        nonlocal truncated
        if m > n:
            if len(found) >= limit:
                truncated = True
                return False
            found.append(
                FactorPair(
                    Sequence(View.ORBIT, tuple(u[1:])),
                    Sequence(View.ORBIT, tuple(v[1:])),
                )
            )
            return True
        a = sum(d * u[d] for d in proper[m])
        b = sum(d * v[d] for d in proper[m])
        rest = sum(u[d1] * v[d2] * g for d1, d2, g in inner[m])
        r = target[m] - rest
        if r < 0:
            return True
        x = 0
        while x * b <= r:
            y, remainder = divmod(r - x * b, a + m * x)
            if remainder == 0:
                u[m], v[m] = x, y
                alive = extend(m + 1)
                u[m], v[m] = 0, 0
                if not alive:
                    return False
            x += 1
        return True

    for d in divisors(target[1]):
        u[1], v[1] = d, target[1] // d
        if not extend(2):
            break
    return FactorSearchResult(tuple(found), truncated)
