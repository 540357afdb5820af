import random

import pytest

from orbitkit import (
    CycleSystem,
    Sequence,
    View,
    build,
    count_fixed,
    cyclic_subgroup_count,
    iterate_orbits,
    orbit_to_fix,
    primitive_lattice_count,
    product_orbits,
    simulate_iterate,
    simulate_product,
)
from orbitkit.oracle import to_sequence
from orbitkit.sequences import zeta
from helpers import random_orbit

from math import gcd


def test_cycle_system_construction():
    sys_ = CycleSystem({2: 3, 5: 1}, horizon=6)
    assert sys_.total_points == 2 * 3 + 5
    assert sys_.cycles[2] == 3


def test_cycle_system_validation():
    with pytest.raises(ValueError):
        CycleSystem({0: 1}, horizon=4)
    with pytest.raises(ValueError):
        CycleSystem({5: 1}, horizon=4)
    with pytest.raises(ValueError):
        CycleSystem({2: 0}, horizon=4)


def test_build_roundtrip():
    o = Sequence(View.ORBIT, (2, 0, 1, 4))
    sys_ = build(o)
    assert to_sequence(sys_, 4) == o
    assert sys_.horizon == 4


def test_count_fixed_matches_transform():
    rng = random.Random(11)
    for _ in range(20):
        o = random_orbit(rng, 18, 4)
        sys_ = build(o)
        f = orbit_to_fix(o)
        for n in range(1, 19):
            assert count_fixed(sys_, n) == f[n]


def test_count_fixed_respects_horizon():
    sys_ = build(Sequence(View.ORBIT, (1, 1)))
    with pytest.raises(ValueError):
        count_fixed(sys_, 3)


def test_simulate_product_small():
    u = Sequence(View.ORBIT, (1, 1))  # fixed point plus a 2-cycle
    v = Sequence(View.ORBIT, (0, 2))  # two 2-cycles
    # n=2 gets 2 from the fixed point paired with each 2-cycle and
    # 2*2 from the 2-cycle paired with each 2-cycle
    got = simulate_product(build(u), build(v), 2)
    assert got == product_orbits(u, v)
    assert got.terms == (0, 6)


def test_simulate_product_zeta():
    z = zeta(6)
    got = simulate_product(build(z), build(z), 6)
    assert got.terms == (1, 4, 5, 10, 7, 20)


def test_simulate_product_random():
    rng = random.Random(12)
    for _ in range(60):
        u = random_orbit(rng, 10, 3)
        v = random_orbit(rng, 10, 3)
        assert simulate_product(build(u), build(v), 10) == product_orbits(u, v)


def test_simulate_iterate_small():
    o = Sequence(View.ORBIT, (1, 1, 0, 1))
    got = simulate_iterate(build(o), 2, 2)
    assert got == iterate_orbits(o, 2)


def test_simulate_iterate_random():
    rng = random.Random(13)
    for _ in range(60):
        o = random_orbit(rng, 12, 3)
        k = rng.randint(1, 6)
        assert simulate_iterate(build(o), k, 12 // k) == iterate_orbits(o, k)


def test_simulate_iterate_horizon_guard():
    o = Sequence(View.ORBIT, (1, 1, 1, 1))
    with pytest.raises(ValueError):
        simulate_iterate(build(o), 3, 2)  # needs 6 > horizon 4


def brute_cyclic_subgroups(n):
    # subgroups of C_n x C_n are counted via their cyclic generators
    seen = 0
    for d in range(1, n + 1):
        if n % d:
            continue
        elements = sum(
            1
            for a in range(d)
            for b in range(d)
            if d // gcd(gcd(a, b), d) == d
        )
        phi_d = sum(1 for m in range(1, d + 1) if gcd(m, d) == 1)
        seen += elements // phi_d
    return seen


def test_cyclic_subgroup_count_small():
    assert cyclic_subgroup_count(1) == 1
    assert cyclic_subgroup_count(2) == 4
    assert cyclic_subgroup_count(4) == 10
    for n in range(1, 30):
        assert cyclic_subgroup_count(n) == brute_cyclic_subgroups(n)


def brute_primitive_lattices(n):
    count = 0
    for a in range(1, n + 1):
        if n % a:
            continue
        c = n // a
        for b in range(a):
            if gcd(gcd(a, b), c) == 1:
                count += 1
    return count


def test_primitive_lattice_count_small():
    assert primitive_lattice_count(1) == 1
    assert primitive_lattice_count(2) == 3
    assert primitive_lattice_count(4) == 6
    for n in range(1, 40):
        assert primitive_lattice_count(n) == brute_primitive_lattices(n)


def test_counts_tie_to_self_product():
    prod = product_orbits(zeta(40), zeta(40))
    for n in range(1, 41):
        assert cyclic_subgroup_count(n) == prod[n]
        divisor_sum = sum(
            primitive_lattice_count(d) for d in range(1, n + 1) if n % d == 0
        )
        assert divisor_sum == prod[n]
