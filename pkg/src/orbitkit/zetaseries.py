"""The ordinary-power-series route to the dynamical zeta function.

Two independent ways to expand zeta_T(s) = prod_i (1 - s^i)^{-O(i)}
= exp(sum_n F(n) s^n / n): multiply the product out factor by factor,
or exponentiate the logarithmic series.  Coefficient n of either is
1, G(1), G(2), ... - the Euler transform - which gives the transforms
module something to be checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .sequences import Sequence, View
from .transforms import NegativeError, NonIntegralError


@dataclass(frozen=True)
class PowerSeries:
    """Exact coefficients of s**0 .. s**order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("a power series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        """Coefficient of s**i (zero-based)."""
        if not 0 <= i <= self.order:
            raise IndexError(f"power {i} outside 0..{self.order}")
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def integer_coeffs(self) -> list[int]:
        """Coefficients as ints; raises if any denominator is not 1."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient of s**{i} is {c}, not an integer")
            out.append(c.numerator)
        return out


def mul_series(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to min(a.order, b.order)."""
    order = min(a.order, b.order)
    out = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            bj = b[j]
            if bj != 0:
                out[i + j] += ai * bj
    return PowerSeries(tuple(out))


def exp_series(a: PowerSeries) -> PowerSeries:
    """exp of a series with zero constant term, to the same order.

    Uses b' = a' b, i.e. n b(n) = sum_{k<=n} k a(k) b(n-k).
    """
    if a[0] != 0:
        raise ValueError(f"exp_series needs zero constant term, got {a[0]}")
    order = a.order
    weighted = [k * a[k] for k in range(1, order + 1)]
    out = [Fraction(1)] + [Fraction(0)] * order
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            w = weighted[k - 1]
            if w != 0:
                acc += w * out[n - k]
        out[n] = acc / n
    return PowerSeries(tuple(out))


def zeta_from_fix(f: Sequence) -> PowerSeries:
    """zeta_T as exp(sum F(n) s^n / n), to order |f|.

    The result must have nonnegative integer coefficients; if not, f
    was not the fixed-point data of any map and the corresponding
    realizability error is raised with the offending order.
    """
    f.require_view(View.FIX, "zeta_from_fix")
    log_coeffs = [Fraction(0)] + [Fraction(f[n], n) for n in range(1, len(f) + 1)]
    series = exp_series(PowerSeries(tuple(log_coeffs)))
    for i, c in enumerate(series.coeffs):
        if c.denominator != 1:
            raise NonIntegralError(i, f"zeta coefficient of s**{i} is {c}")
        if c < 0:
            raise NegativeError(i, f"zeta coefficient of s**{i} is {c}")
    return series


def product_formula(o: Sequence) -> PowerSeries:
    """zeta_T as the product prod_i (1 - s^i)^{-O(i)}, to order |o|."""
    o.require_view(View.ORBIT, "product_formula")
    order = len(o)
    out = [1] + [0] * order  # plain ints; every factor is integral
    for i in range(1, order + 1):
        c = o[i]
        if c == 0:
            continue
        new = [0] * (order + 1)
        for j in range(order // i + 1):
            w = comb(c + j - 1, j)  # (1 - s^i)^(-c) = sum_j C(c+j-1, j) s^(ij)
            pos = i * j
            for q in range(order + 1 - pos):
                if out[q]:
                    new[pos + q] += w * out[q]
        out = new
    return PowerSeries(tuple(Fraction(x) for x in out))
