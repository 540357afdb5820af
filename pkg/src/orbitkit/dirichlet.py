"""Truncated Dirichlet series with exact rational coefficients.

A DirichletPoly holds the coefficients of n^{-s} for n = 1..N.
Multiplication is Dirichlet convolution truncated to N; division is
the unique exact inverse when the divisor has a nonzero leading
coefficient.  Identities involving infinite Euler products are checked
in cleared-denominator form, so only these finite objects ever exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .numtheory import _require_positive, divisors
from .sequences import RationalSequence, Sequence

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class DirichletPoly:
    """Coefficients of 1^{-s} .. N^{-s}, stored as exact Fractions."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("a Dirichlet polynomial needs at least one coefficient")

    @property
    def n_terms(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        """Coefficient of n^{-s} (one-based)."""
        if not 1 <= n <= len(self.coeffs):
            raise IndexError(f"index {n} outside 1..{len(self.coeffs)}")
        return self.coeffs[n - 1]

    def __iter__(self):
        return iter(self.coeffs)


def from_sequence(s: Union[Sequence, RationalSequence]) -> DirichletPoly:
    """The series sum s(n) n^{-s}, any view."""
    return DirichletPoly(tuple(Fraction(t) for t in s.terms))


def from_coeffs(values: Iterable[Rational]) -> DirichletPoly:
    return DirichletPoly(tuple(Fraction(v) for v in values))


def zeta_shift(a: int, n_terms: int) -> DirichletPoly:
    """zeta(s - a) truncated: coefficient n**a at n, for a >= 0."""
    _require_positive(n_terms, "n_terms")
    if not isinstance(a, int) or isinstance(a, bool) or a < 0:
        raise ValueError(f"shift must be a nonnegative integer, got {a!r}")
    return DirichletPoly(tuple(Fraction(n**a) for n in range(1, n_terms + 1)))


def zeta_poly(n_terms: int) -> DirichletPoly:
    """zeta(s) truncated: all coefficients 1."""
    return zeta_shift(0, n_terms)


def delta_poly(n_terms: int) -> DirichletPoly:
    """The multiplicative identity: 1 at n=1, 0 elsewhere."""
    return sparse([(1, 1)], n_terms)


def sparse(entries: Iterable[tuple[int, Rational]], n_terms: int) -> DirichletPoly:
    """Polynomial with the given (index, coefficient) entries, rest zero."""
    _require_positive(n_terms, "n_terms")
    coeffs = [Fraction(0)] * n_terms
    seen: set[int] = set()
    for idx, value in entries:
        if not 1 <= idx <= n_terms:
            raise ValueError(f"sparse index {idx} outside 1..{n_terms}")
        if idx in seen:
            raise ValueError(f"duplicate sparse index {idx}")
        seen.add(idx)
        coeffs[idx - 1] = Fraction(value)
    return DirichletPoly(tuple(coeffs))


def mul(a: DirichletPoly, b: DirichletPoly) -> DirichletPoly:
    """Dirichlet convolution, truncated to min(|a|, |b|)."""
    n_out = min(len(a), len(b))
    out = [Fraction(0)] * n_out
    for d in range(1, n_out + 1):
        ad = a[d]
        if ad == 0:
            continue
        for e in range(1, n_out // d + 1):
            be = b[e]
            if be != 0:
                out[d * e - 1] += ad * be
    return DirichletPoly(tuple(out))


def div(a: DirichletPoly, b: DirichletPoly) -> DirichletPoly:
    """The unique c with mul(b, c) = a, term by term; needs b(1) != 0."""
    if b[1] == 0:
        raise ZeroDivisionError("divisor has zero leading coefficient")
    n_out = min(len(a), len(b))
    out: list[Fraction] = []
    for n in range(1, n_out + 1):
        acc = a[n]
        for d in divisors(n):
            if d < n:
                acc -= out[d - 1] * b[n // d]
        out.append(acc / b[1])
    return DirichletPoly(tuple(out))


def dilate(a: DirichletPoly, k: int) -> DirichletPoly:
    """Substitute s -> ks: coefficient a(j) moves to index j**k.

    Composing with zeta_shift gives the even-argument zeta values, e.g.
    dilate(zeta_shift(c, N), 2) is zeta(2s - c) truncated to N.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"dilation power must be an integer >= 1, got {k!r}")
    n_out = len(a)
    out = [Fraction(0)] * n_out
    j = 1
    while j**k <= n_out:
        out[j**k - 1] = a[j]
        j += 1
    return DirichletPoly(tuple(out))
