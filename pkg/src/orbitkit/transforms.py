"""Transforms between the three views of one system's counting data.

fix <-> orbit is Moebius inversion against the divisor sum
F(n) = sum_{d|n} d * O(d); orbit <-> monoid is the Euler transform,
computed through the recurrence n*G(n) = F(n) + sum_{k<n} F(k) G(n-k).
All arithmetic is exact; failures of integrality or positivity are how
non-realizable inputs announce themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence as Vector

from .numtheory import divisors, mobius
from .sequences import Sequence, View


class NotRealizableError(ValueError):
    """The data cannot be the fixed-point counts of any map.

    ``index`` is the smallest offending one-based index; ``kind`` is
    "nonintegral" or "negative".
    """

    def __init__(self, index: int, kind: str, message: str) -> None:
        super().__init__(message)
        self.index = index
        self.kind = kind


class NonIntegralError(NotRealizableError):
    def __init__(self, index: int, message: Optional[str] = None) -> None:
        super().__init__(
            index, "nonintegral", message or f"orbit count at n={index} is not integral"
        )


class NegativeError(NotRealizableError):
    def __init__(self, index: int, message: Optional[str] = None) -> None:
        super().__init__(
            index, "negative", message or f"orbit count at n={index} is negative"
        )


@dataclass(frozen=True)
class Realizability:
    ok: bool
    index: Optional[int]
    kind: Optional[str]


def orbit_to_fix(o: Sequence) -> Sequence:
    """F(n) = sum_{d|n} d * O(d)."""
    o.require_view(View.ORBIT, "orbit_to_fix")
    terms = tuple(sum(d * o[d] for d in divisors(n)) for n in range(1, len(o) + 1))
    return Sequence(View.FIX, terms)


def _invert_fix_terms(terms: Vector[int]) -> list[int]:
    """Moebius inversion O(n) = (1/n) sum_{d|n} mu(n/d) F(d), exactly."""
    out: list[int] = []
    for n in range(1, len(terms) + 1):
        total = sum(mobius(n // d) * terms[d - 1] for d in divisors(n))
        q, r = divmod(total, n)
        if r:
            raise NonIntegralError(n)
        if q < 0:
            raise NegativeError(n)
        out.append(q)
    return out


def fix_to_orbit(f: Sequence) -> Sequence:
    f.require_view(View.FIX, "fix_to_orbit")
    return Sequence(View.ORBIT, tuple(_invert_fix_terms(f.terms)))


def realizable_as_fix(s: Sequence) -> Realizability:
    """Whether s could be fixed-point data, with the first failing index.

    Ignores the view tag: the question makes sense for raw data.
    """
    try:
        _invert_fix_terms(s.terms)
    except NotRealizableError as err:
        return Realizability(False, err.index, err.kind)
    return Realizability(True, None, None)


def euler(o: Sequence) -> Sequence:
    """Euler transform: weight-n counts of the free abelian orbit monoid."""
    o.require_view(View.ORBIT, "euler")
    fix = orbit_to_fix(o).terms
    g: list[int] = []
    for n in range(1, len(o) + 1):
        total = fix[n - 1] + sum(fix[k - 1] * g[n - k - 1] for k in range(1, n))
        q, r = divmod(total, n)
        if r:
            raise AssertionError(
                f"euler recurrence produced a non-integer at n={n}; this is a bug"
            )
        g.append(q)
    return Sequence(View.MONOID, tuple(g))


def euler_inverse(g: Sequence) -> Sequence:
    """Invert the Euler transform back to an orbit sequence.

    Recovers F(n) = n*g(n) - sum_{k<n} F(k) g(n-k) and then Moebius
    inverts; a NotRealizableError means g is not the Euler transform of
    any nonnegative orbit sequence.
    """
    g.require_view(View.MONOID, "euler_inverse")
    fix: list[int] = []
    for n in range(1, len(g) + 1):
        value = n * g[n] - sum(fix[k - 1] * g[n - k] for k in range(1, n))
        if value < 0:
            raise NegativeError(n, f"recovered fix count at n={n} is negative")
        fix.append(value)
    return Sequence(View.ORBIT, tuple(_invert_fix_terms(fix)))


@dataclass(frozen=True)
class Multiplicativity:
    ok: bool
    witness: Optional[tuple[int, int]]


def is_multiplicative(s: Sequence) -> Multiplicativity:
    """Check s(mn) = s(m) s(n) for coprime m, n, with mn within range.

    On failure the witness is the lexicographically smallest bad pair;
    s(1) != 1 is reported as witness (1, 1).
    """
    if s[1] != 1:
        return Multiplicativity(False, (1, 1))
    n_max = len(s)
    for m in range(2, n_max + 1):
        if m * (m + 1) > n_max:
            break
        for n in range(m + 1, n_max // m + 1):
            if gcd(m, n) == 1 and s[m * n] != s[m] * s[n]:
                return Multiplicativity(False, (m, n))
    return Multiplicativity(True, None)


def convert(s: Sequence, view: View) -> Sequence:
    """Re-express s in another view (identity when views already agree)."""
    if s.view is view:
        return s
    if s.view is View.ORBIT:
        return orbit_to_fix(s) if view is View.FIX else euler(s)
    if s.view is View.FIX:
        o = fix_to_orbit(s)
        return o if view is View.ORBIT else euler(o)
    o = euler_inverse(s)
    return o if view is View.ORBIT else orbit_to_fix(o)
