"""Brute-force ground truth via explicit unions of cycles.

Everything here is deliberately naive.  An orbit sequence is realized
as a multiset of cycles; products and iterates are then computed by
tracing points one step at a time, never through the gcd/lcm algebra
that the operators module uses.  Slow and dumb on purpose: these are
the referees for the clever routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping

from .numtheory import _require_positive, divisors, euler_phi, mobius
from .sequences import Sequence, View


@dataclass(frozen=True)
class CycleSystem:
    """A multiset of cycle lengths plus the horizon the counts cover.

    ``cycles`` maps length -> count (only nonzero counts are stored);
    lengths above ``horizon`` are unknown rather than absent.
    """

    cycles: Mapping[int, int]
    horizon: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycles", dict(self.cycles))
        _require_positive(self.horizon, "horizon")
        for length, count in self.cycles.items():
            if not 1 <= length <= self.horizon:
                raise ValueError(f"cycle length {length} outside 1..{self.horizon}")
            if count < 1:
                raise ValueError(f"count for length {length} must be >= 1, got {count}")

    @property
    def total_points(self) -> int:
        return sum(length * count for length, count in self.cycles.items())


def build(o: Sequence) -> CycleSystem:
    """Realize an orbit sequence as cycles: o[n] cycles of length n."""
    o.require_view(View.ORBIT, "oracle.build")
    return CycleSystem(
        {n: o[n] for n in range(1, len(o) + 1) if o[n]}, horizon=len(o)
    )


def to_sequence(system: CycleSystem, n_terms: int) -> Sequence:
    if not 1 <= n_terms <= system.horizon:
        raise ValueError(f"n_terms {n_terms} outside 1..{system.horizon}")
    return Sequence(
        View.ORBIT, tuple(system.cycles.get(n, 0) for n in range(1, n_terms + 1))
    )


def count_fixed(system: CycleSystem, n: int) -> int:
    """Points fixed by the n-th iterate: every point on a cycle whose
    length divides n."""
    if not 1 <= n <= system.horizon:
        raise ValueError(f"n={n} exceeds the realized horizon {system.horizon}")
    return sum(d * system.cycles.get(d, 0) for d in divisors(n))


def simulate_product(a: CycleSystem, b: CycleSystem, n_terms: int) -> Sequence:
    """Orbit counts of the product system, found by tracing points.

    Works one pair of cycles at a time: lay out the d1 x d2 grid of
    point pairs, advance both coordinates one step per tick, and mark
    starting points as visited until the grid is exhausted.  Cycle
    pairs with equal lengths trace identically, so each (d1, d2) grid
    is walked once and weighted by count1 * count2.
    """
    if n_terms > a.horizon or n_terms > b.horizon:
        raise ValueError(
            f"n_terms {n_terms} exceeds a horizon ({a.horizon}, {b.horizon})"
        )
    _require_positive(n_terms, "n_terms")
    counts = [0] * (n_terms + 1)
    for d1, c1 in sorted(a.cycles.items()):
        for d2, c2 in sorted(b.cycles.items()):
            weight = c1 * c2
            visited = bytearray(d1 * d2)
            for i in range(d1):
                for j in range(d2):
                    if visited[i * d2 + j]:
                        continue
                    x, y, length = i, j, 0
                    while True:
                        visited[x * d2 + y] = 1
                        x += 1
                        if x == d1:
                            x = 0
                        y += 1
                        if y == d2:
                            y = 0
                        length += 1
                        if x == i and y == j:
                            break
                    if length <= n_terms:
                        counts[length] += weight
    return Sequence(View.ORBIT, tuple(counts[1:]))


def simulate_iterate(a: CycleSystem, k: int, n_terms: int) -> Sequence:
    """Orbit counts of the k-th iterate, found by walking k steps at a
    time around each cycle."""
    _require_positive(k, "k")
    _require_positive(n_terms, "n_terms")
    if k * n_terms > a.horizon:
        raise ValueError(
            f"need realization to length {k * n_terms}, have {a.horizon}"
        )
    counts = [0] * (n_terms + 1)
    for d, c in sorted(a.cycles.items()):
        visited = bytearray(d)
        for start in range(d):
            if visited[start]:
                continue
            pos, length = start, 0
            while True:
                visited[pos] = 1
                pos = (pos + k) % d
                length += 1
                if pos == start:
                    break
            if length <= n_terms:
                counts[length] += c
    return Sequence(View.ORBIT, tuple(counts[1:]))


def cyclic_subgroup_count(n: int) -> int:
    """Number of cyclic subgroups of Z/n x Z/n.

    For each d | n there are sum_{e|d} mu(d/e) e^2 elements of exact
    order d, and each cyclic subgroup of order d owns phi(d) of them.
    """
    _require_positive(n)
    total = 0
    for d in divisors(n):
        exact = sum(mobius(d // e) * e * e for e in divisors(d))
        q, r = divmod(exact, euler_phi(d))
        if r:
            raise AssertionError(f"order count not divisible by phi at d={d}")
        total += q
    return total


def primitive_lattice_count(n: int) -> int:
    """Number of primitive index-n sublattices of Z^2.

    Hermite normal form: bases ((a, b), (0, c)) with ac = n and
    0 <= b < a, primitive when gcd(a, b, c) = 1.
    """
    _require_positive(n)
    total = 0
    for a in divisors(n):
        c = n // a
        g = gcd(a, c)
        for b in range(a):
            if gcd(g, b) == 1:
                total += 1
    return total
