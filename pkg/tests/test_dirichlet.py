from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orbitkit import DirichletPoly, dilate, div, mul, sparse, zeta_poly, zeta_shift
from orbitkit.dirichlet import delta_poly, from_coeffs, from_sequence
from orbitkit.sequences import delta, id_orbits, zeta
from orbitkit import product_orbits

rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def poly(*values):
    return from_coeffs(values)


def test_from_sequence():
    assert from_sequence(zeta(5)).coeffs == (1, 1, 1, 1, 1)
    assert from_sequence(id_orbits(4)).coeffs == (1, 2, 3, 4)
    assert from_sequence(delta(3)).coeffs == (1, 0, 0)
    assert all(isinstance(c, Fraction) for c in from_sequence(zeta(3)).coeffs)


def test_one_indexed_getitem():
    p = poly(3, 7)
    assert p[1] == 3 and p[2] == 7
    with pytest.raises(IndexError):
        p[0]
    with pytest.raises(IndexError):
        p[3]


def test_rejects_empty():
    with pytest.raises(ValueError):
        DirichletPoly(())


def test_mul_is_dirichlet_convolution():
    zz = mul(zeta_poly(12), zeta_poly(12))
    # coefficient n of zeta^2 is the divisor count
    assert zz[6] == 4
    assert zz[12] == 6
    assert zz.coeffs[:6] == (1, 2, 2, 3, 2, 4)


def test_mul_unit_and_length():
    a = poly(2, 5, 7, 11)
    assert mul(a, delta_poly(4)) == a
    assert len(mul(a, zeta_poly(2)).coeffs) == 2


def test_mobius_inverts_zeta():
    from orbitkit import mobius

    mu = from_coeffs(mobius(n) for n in range(1, 51))
    assert mul(zeta_poly(50), mu) == delta_poly(50)


def test_div_roundtrip():
    a = poly(1, 4, 5, 10, 7, 20)
    assert div(a, a) == delta_poly(6)
    zz = mul(zeta_poly(8), zeta_poly(8))
    assert div(zz, zeta_poly(8)) == zeta_poly(8)


def test_div_requires_unit():
    with pytest.raises(ZeroDivisionError):
        div(zeta_poly(4), poly(0, 1, 0, 0))


def test_div_ttimest_series():
    n = 8
    num = mul(mul(zeta_poly(n), zeta_poly(n)), zeta_shift(1, n))
    got = div(num, dilate(zeta_poly(n), 2))
    assert got.coeffs == (1, 4, 5, 10, 7, 20, 9, 22)
    assert got == from_sequence(product_orbits(zeta(n), zeta(n)))


def test_zeta_shift():
    assert zeta_shift(0, 5) == zeta_poly(5)
    assert zeta_shift(1, 4).coeffs == (1, 2, 3, 4)
    assert zeta_shift(2, 3).coeffs == (1, 4, 9)
    with pytest.raises(ValueError):
        zeta_shift(-1, 4)


def test_dilate():
    squares = dilate(zeta_poly(10), 2)
    assert [squares[n] for n in range(1, 11)] == [1, 0, 0, 1, 0, 0, 0, 0, 1, 0]
    a = poly(3, 1, 4, 1)
    assert dilate(a, 1) == a
    assert dilate(delta_poly(6), 3) == delta_poly(6)
    with pytest.raises(ValueError):
        dilate(a, 0)


def test_dilate_of_shift_weights_squares():
    # coefficient j^c lands at j^2: the zeta(2s - c) prefix
    p = dilate(zeta_shift(1, 9), 2)
    assert [p[n] for n in range(1, 10)] == [1, 0, 0, 2, 0, 0, 0, 0, 3]


def test_sparse():
    p = sparse([(1, 5), (2, -2)], 4)
    assert p.coeffs == (5, -2, 0, 0)
    assert sparse([(1, 1)], 3) == delta_poly(3)
    with pytest.raises(ValueError):
        sparse([(1, 1), (1, 2)], 4)  # duplicate index
    with pytest.raises(ValueError):
        sparse([(5, 1)], 4)  # out of range


@given(st.lists(rationals, min_size=1, max_size=12), st.lists(rationals, min_size=1, max_size=12))
@settings(max_examples=40)
def test_mul_commutes(a_coeffs, b_coeffs):
    a, b = from_coeffs(a_coeffs), from_coeffs(b_coeffs)
    assert mul(a, b) == mul(b, a)


@given(st.lists(rationals, min_size=1, max_size=10))
@settings(max_examples=40)
def test_div_inverts_mul(coeffs):
    b = from_coeffs(coeffs)
    if b[1] == 0:
        return
    a = poly(*range(1, len(coeffs) + 1))
    assert div(mul(a, b), b) == a
