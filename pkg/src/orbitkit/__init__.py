"""Exact orbit-counting toolkit for integer sequences.

A sequence is read as per-period orbit counts (or fixed-point counts)
of a dynamical system.  The library provides the transforms between
the orbit, fixed-point and orbit-monoid views, product/union/iterate
operators, Dirichlet and zeta series identities, growth asymptotics,
a brute-force simulation oracle, and a factorization search — all in
exact integer/rational arithmetic apart from the asymptotics module.
"""

from .asymptotics import (
    GrowthReport,
    entropy_estimate,
    harmonic_number,
    mertens_sum,
    pi_count,
    pnt_report,
)
from .bfile import BFile, BFileFormatError, format_bfile, parse_bfile
from .dirichlet import DirichletPoly, dilate, div, mul, sparse, zeta_poly, zeta_shift
from .factorization import FactorPair, FactorSearchResult, factor_search
from .identities import Identity, VerifyResult, run, run_all
from .numtheory import (
    Factorization,
    PrimeSet,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    mobius,
    part,
    primes_upto,
    sigma_k,
)
from .operators import (
    iterate_fix,
    iterate_orbits,
    product_fix,
    product_orbits,
    union_orbits,
)
from .oracle import (
    CycleSystem,
    build,
    count_fixed,
    cyclic_subgroup_count,
    primitive_lattice_count,
    simulate_iterate,
    simulate_product,
)
from .sequences import (
    BuiltinSpec,
    RationalSequence,
    Sequence,
    View,
    ViewError,
    builtin,
    builtin_names,
    truncate,
)
from .transforms import (
    Multiplicativity,
    NegativeError,
    NonIntegralError,
    NotRealizableError,
    Realizability,
    convert,
    euler,
    euler_inverse,
    fix_to_orbit,
    is_multiplicative,
    orbit_to_fix,
    realizable_as_fix,
)
from .zetaseries import PowerSeries, exp_series, product_formula, zeta_from_fix

__version__ = "0.1.0"

__all__ = [
    "BFile",
    "BFileFormatError",
    "BuiltinSpec",
    "CycleSystem",
    "DirichletPoly",
    "FactorPair",
    "FactorSearchResult",
    "Factorization",
    "GrowthReport",
    "Identity",
    "Multiplicativity",
    "NegativeError",
    "NonIntegralError",
    "NotRealizableError",
    "PowerSeries",
    "PrimeSet",
    "RationalSequence",
    "Realizability",
    "Sequence",
    "VerifyResult",
    "View",
    "ViewError",
    "build",
    "builtin",
    "builtin_names",
    "convert",
    "count_fixed",
    "cyclic_subgroup_count",
    "dilate",
    "div",
    "divisors",
    "entropy_estimate",
    "euler",
    "euler_inverse",
    "euler_phi",
    "exp_series",
    "factor_search",
    "factorize",
    "fix_to_orbit",
    "format_bfile",
    "harmonic_number",
    "is_multiplicative",
    "is_prime",
    "iterate_fix",
    "iterate_orbits",
    "mertens_sum",
    "mobius",
    "mul",
    "orbit_to_fix",
    "parse_bfile",
    "part",
    "pi_count",
    "pnt_report",
    "primes_upto",
    "primitive_lattice_count",
    "product_fix",
    "product_formula",
    "product_orbits",
    "realizable_as_fix",
    "run",
    "run_all",
    "sigma_k",
    "simulate_iterate",
    "simulate_product",
    "sparse",
    "truncate",
    "union_orbits",
    "zeta_from_fix",
    "zeta_poly",
    "zeta_shift",
    "__version__",
]
