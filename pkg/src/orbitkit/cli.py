"""Command-line front end.

Sequences travel as OEIS-style b-files: one ``index value`` pair per
line, indices contiguous, comments starting with ``#`` ignored on
input.  Internally everything is one-indexed; offsets other than 1
exist only at the export/import boundary.

Exit codes: 0 success, 1 verification failure (including
non-realizable inputs), 2 usage error, 3 malformed input file.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .asymptotics import pnt_report
from .bfile import BFileFormatError, format_bfile, parse_bfile
from .factorization import factor_search
from .identities import REGISTRY, run
from .numtheory import PrimeSet
from .operators import iterate_orbits, product_orbits, union_orbits
from .sequences import (
    BuiltinSpec,
    RationalSequence,
    Sequence,
    View,
    builtin,
    builtin_names,
    truncate,
)
from .transforms import NotRealizableError, convert

_PRIME_SET_PARAMS = frozenset({"P", "S"})


def parse_prime_set(text: str) -> PrimeSet:
    """Parse ``2,3`` (finite) or ``~2,3`` (all primes except 2 and 3).

    Bare ``~`` means every prime; the empty string means no primes.
    """
    body = text.strip()
    cofinite = body.startswith("~")
    if cofinite:
        body = body[1:]
    try:
        primes = [int(tok) for tok in body.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"bad prime set {text!r}: entries must be integers") from None
    if cofinite:
        return PrimeSet.all_except(primes)
    return PrimeSet.finite(primes)


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise ValueError(f"--param expects key=value, got {pair!r}")
        if key in _PRIME_SET_PARAMS:
            params[key] = parse_prime_set(raw)
        else:
            try:
                params[key] = int(raw)
            except ValueError:
                raise ValueError(f"parameter {key} must be an integer, got {raw!r}") from None
    return params


def _read_values(path: Optional[str]) -> list[int]:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    return list(parse_bfile(text).values)


def _read_sequence(path: Optional[str], view: View, n_terms: Optional[int] = None) -> Sequence:
    values = _read_values(path)
    if n_terms is not None:
        if len(values) < n_terms:
            raise ValueError(
                f"input has {len(values)} terms but {n_terms} were requested"
            )
        values = values[:n_terms]
    return Sequence(view, tuple(values))


def _emit_values(values, start: int = 1) -> None:
    out = []
    for v in values:
        if not isinstance(v, int):
            if v.denominator != 1:
                raise ValueError(f"cannot emit non-integer value {v} as a b-file")
            v = v.numerator
        out.append(v)
    sys.stdout.write(format_bfile(out, start))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_seq(args) -> int:
    spec = BuiltinSpec(args.name, _parse_params(args.param))
    seq = builtin(spec, args.terms)
    if isinstance(seq, RationalSequence):
        if args.view is not None:
            raise ValueError(f"builtin {args.name!r} is rational-valued and has no view")
        _emit_values(seq.terms)
        return 0
    if args.view is not None:
        seq = convert(seq, View(args.view))
    _emit_values(seq.terms)
    return 0


_TRANSFORMS = {
    "fix-to-orbit": (View.FIX, "fix_to_orbit"),
    "orbit-to-fix": (View.ORBIT, "orbit_to_fix"),
    "euler": (View.ORBIT, "euler"),
    "euler-inv": (View.MONOID, "euler_inverse"),
}

_TRANSFORM_TARGET = {
    "fix-to-orbit": View.ORBIT,
    "orbit-to-fix": View.FIX,
    "euler": View.MONOID,
    "euler-inv": View.ORBIT,
}


def _cmd_transform(args) -> int:
    in_view = _TRANSFORMS[args.kind][0]
    seq = _read_sequence(args.infile, in_view)
    result = convert(seq, _TRANSFORM_TARGET[args.kind])
    _emit_values(result.terms)
    return 0


def _cmd_op(args) -> int:
    if args.op == "iterate":
        if len(args.infile) != 1:
            raise ValueError("iterate takes exactly one --in")
        if args.k is None:
            raise ValueError("iterate requires --k")
        available = args.k * args.terms if args.terms is not None else None
        seq = _read_sequence(args.infile[0], View.ORBIT)
        if available is not None:
            if len(seq) < available:
                raise ValueError(
                    f"iterate with k={args.k} needs {available} input terms, got {len(seq)}"
                )
            seq = truncate(seq, available)
        result = iterate_orbits(seq, args.k)
    else:
        if len(args.infile) != 2:
            raise ValueError(f"{args.op} takes exactly two --in")
        if args.k is not None:
            raise ValueError("--k only applies to iterate")
        a = _read_sequence(args.infile[0], View.ORBIT, args.terms)
        b = _read_sequence(args.infile[1], View.ORBIT, args.terms)
        fn = product_orbits if args.op == "product" else union_orbits
        result = fn(a, b)
    _emit_values(result.terms)
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for name, ident in REGISTRY.items():
            print(f"{name}: {ident.description} (default terms {ident.default_terms})")
        return 0
    if args.name is None:
        raise ValueError("verify needs an identity name, 'all', or --list")
    names = list(REGISTRY) if args.name == "all" else [args.name]
    for name in names:
        if name not in REGISTRY:
            known = ", ".join(REGISTRY)
            raise ValueError(f"unknown identity {name!r}; known: {known}")
    failures = 0
    for name in names:
        result = run(name, args.terms)
        if result.ok:
            print(f"{name}: PASS")
        else:
            failures += 1
            where = "" if result.failing_index is None else f" at index {result.failing_index}"
            detail = f" ({result.detail})" if result.detail else ""
            print(f"{name}: FAIL{where}{detail}")
    return 1 if failures else 0


def _cmd_growth(args) -> int:
    if args.h <= 0:
        raise ValueError("--h must be a positive growth rate")
    spec = BuiltinSpec(args.name, _parse_params(args.param))
    seq = builtin(spec, args.terms)
    if isinstance(seq, RationalSequence):
        raise ValueError(f"builtin {args.name!r} is rational-valued; growth needs orbit counts")
    orbits = convert(seq, View.ORBIT)
    report = pnt_report(orbits, args.h, args.c1, args.terms)
    print(f"n_max {report.n_max}")
    print(f"h {report.h!r}")
    print(f"c1 {report.c1!r}")
    print(f"pi_actual {report.pi_actual}")
    print(f"pi_predicted {report.pi_predicted!r}")
    print(f"mertens_actual {report.mertens_actual!r}")
    print(f"mertens_minus_c1_harmonic {report.mertens_minus_c1_harmonic!r}")
    return 0


def _cmd_factor(args) -> int:
    target = _read_sequence(args.infile, View.ORBIT, args.terms)
    result = factor_search(target, len(target), limit=args.limit)
    if args.json:
        payload = {
            "pairs": [
                {"left": list(p.left.terms), "right": list(p.right.terms)}
                for p in result.pairs
            ],
            "truncated": result.truncated,
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    print(f"pairs {len(result.pairs)}")
    print(f"truncated {'true' if result.truncated else 'false'}")
    for pair in result.pairs:
        left = " ".join(str(t) for t in pair.left.terms)
        right = " ".join(str(t) for t in pair.right.terms)
        print(f"{left} | {right}")
    return 0


def _cmd_export(args) -> int:
    _emit_values(_read_values(args.infile), args.offset)
    return 0


def _cmd_import(args) -> int:
    _emit_values(_read_values(args.infile), 1)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitkit",
        description="Orbit-counting sequence toolkit: builtins, transforms, operators, identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print a builtin sequence as a b-file")
    p.add_argument("name", help="builtin name: " + ", ".join(builtin_names()))
    p.add_argument("--param", action="append", default=[], metavar="K=V",
                   help="builtin parameter; prime sets use e.g. P=2,3 or P=~2,3 (cofinite)")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--view", choices=[v.value for v in View], default=None,
                   help="convert to this view before printing")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("transform", help="apply a transform to a b-file")
    p.add_argument("kind", choices=sorted(_TRANSFORMS))
    p.add_argument("--in", dest="infile", default=None, metavar="FILE",
                   help="input b-file (default stdin)")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("op", help="apply an operator to orbit-count b-files")
    p.add_argument("op", choices=["product", "union", "iterate"])
    p.add_argument("--in", dest="infile", action="append", default=[], metavar="FILE")
    p.add_argument("--k", type=int, default=None, help="iteration power (iterate only)")
    p.add_argument("--terms", type=int, default=None,
                   help="output length; inputs must carry enough terms")
    p.set_defaults(func=_cmd_op)

    p = sub.add_parser("verify", help="run a named identity (or 'all')")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--terms", type=int, default=None,
                   help="override the identity's default term count")
    p.add_argument("--list", action="store_true", help="list identities and exit")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("growth", help="print a growth report for a builtin")
    p.add_argument("--name", required=True)
    p.add_argument("--param", action="append", default=[], metavar="K=V")
    p.add_argument("--h", type=float, required=True, help="exponential growth rate")
    p.add_argument("--c1", type=float, required=True, help="leading constant")
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("factor", help="search for product factorizations of a b-file")
    p.add_argument("--in", dest="infile", default=None, metavar="FILE")
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--json", action="store_true", help="emit a JSON envelope")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("export", help="re-emit a canonical b-file at another offset")
    p.add_argument("--in", dest="infile", default=None, metavar="FILE")
    p.add_argument("--offset", type=int, required=True)
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("import", help="normalize a b-file to offset 1")
    p.add_argument("--in", dest="infile", default=None, metavar="FILE")
    p.set_defaults(func=_cmd_import)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except BFileFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    except NotRealizableError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
