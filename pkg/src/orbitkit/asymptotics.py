"""Orbit-growth statistics: dynamical prime counting and Mertens sums.

This is the only module that touches floating point; everything
upstream stays exact.  pi(N) counts closed orbits of length at most N;
M(N) weights them by e^{-h n}.  When F(n) = C1 e^{hn} + small, the
prediction C1 e^{h(N+1)} / (N (e^h - 1)) tracks pi(N) to relative
order 1/N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sequences import Sequence, View


@dataclass(frozen=True)
class GrowthReport:
    n_max: int
    h: float
    c1: float
    pi_actual: int
    pi_predicted: float
    mertens_actual: float
    mertens_minus_c1_harmonic: float


def pi_count(o: Sequence, n_max: int) -> int:
    """Number of closed orbits of length at most n_max (exact)."""
    o.require_view(View.ORBIT, "pi_count")
    if not 1 <= n_max <= len(o):
        raise ValueError(f"n_max {n_max} outside 1..{len(o)}")
    return sum(o[n] for n in range(1, n_max + 1))


def _weighted_term(count: int, h: float, n: int) -> float:
    if count == 0:
        return 0.0
    try:
        return float(count) * math.exp(-h * n)
    except OverflowError:
        # count too big for a float on its own; fold it into the exponent
        return math.exp(math.log(count) - h * n)


def mertens_sum(o: Sequence, n_max: int, h: float) -> float:
    """sum_{n<=n_max} O(n) e^{-hn}, summed left to right."""
    o.require_view(View.ORBIT, "mertens_sum")
    if not 1 <= n_max <= len(o):
        raise ValueError(f"n_max {n_max} outside 1..{len(o)}")
    if not h > 0:
        raise ValueError(f"h must be positive, got {h}")
    total = 0.0
    for n in range(1, n_max + 1):
        total += _weighted_term(o[n], h, n)
    return total


def harmonic_number(n: int) -> float:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = 0.0
    for k in range(1, n + 1):
        total += 1.0 / k
    return total


def pnt_report(o: Sequence, h: float, c1: float, n_max: int) -> GrowthReport:
    """Actual versus predicted growth for a system with F ~ c1 e^{hn}."""
    if not h > 0:
        raise ValueError(f"h must be positive, got {h}")
    if not c1 > 0:
        raise ValueError(f"c1 must be positive, got {c1}")
    pi_actual = pi_count(o, n_max)
    pi_predicted = c1 * math.exp(h * (n_max + 1)) / (n_max * (math.exp(h) - 1.0))
    mertens_actual = mertens_sum(o, n_max, h)
    return GrowthReport(
        n_max=n_max,
        h=h,
        c1=c1,
        pi_actual=pi_actual,
        pi_predicted=pi_predicted,
        mertens_actual=mertens_actual,
        mertens_minus_c1_harmonic=mertens_actual - c1 * harmonic_number(n_max),
    )


def entropy_estimate(f: Sequence) -> float:
    """log F(N) / N from the last term; exploration aid, not a contract."""
    f.require_view(View.FIX, "entropy_estimate")
    last = f[len(f)]
    if last < 1:
        raise ValueError("entropy estimate needs a positive final term")
    return math.log(last) / len(f)
