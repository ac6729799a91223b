"""Command-line front-end.

Exit codes are a stable contract: 0 affirmative/success, 1 negative verdict
or counterexample found, 2 usage error, 3 precision error.
"""
from __future__ import annotations

import argparse
import sys

from . import geometry, table
from .descent import descend, find_exact_solution, is_fibonacci_by_descent, successors
from .fibonacci import cassini_residual, fib
from .geometry import PrecisionConfig, PrecisionTooLow, convergence_table
from .wasteels import classify

VERIFY_SUITES = ("cassini", "equivalence", "parity", "convergence")

_DEFAULT_BOUNDS = {
    "cassini": 300,
    "equivalence": 100_000,
    "parity": 1_000,
    "convergence": 60,
}


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _cmd_fib(args: argparse.Namespace) -> int:
    print(fib(args.i))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    rows = table.build_rows(args.max_beta)
    sys.stdout.write(table.render(rows, args.format))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    beta = args.beta
    found = successors(beta).successors
    print(f"beta: {beta}")
    if not found:
        print("status: not-hippasus")
        print("successors: none")
        return 1
    print("status: hippasus")
    print("successors:", " ".join(str(a) for a in found))
    trace = descend(beta)
    assert trace is not None
    print("descent:", " ".join(str(s) for s in trace.steps))
    print(f"fibonacci_index: {trace.recovered_index}")
    return 0


def _cmd_descent(args: argparse.Namespace) -> int:
    trace = descend(args.beta)
    if trace is None:
        print(f"not a Hippasus number: {args.beta}")
        return 1
    print("descent:", " ".join(str(s) for s in trace.steps))
    print(f"fibonacci_index: {trace.recovered_index}")
    return 0


def _cmd_wasteels(args: argparse.Namespace) -> int:
    verdict = classify(args.x, args.y)
    print(f"x: {verdict.x}")
    print(f"y: {verdict.y}")
    print(f"residual: {verdict.residual}")
    print(f"consecutive: {'yes' if verdict.consecutive else 'no'}")
    if verdict.consecutive:
        assert verdict.indices is not None
        print(f"indices: {verdict.indices[0]} {verdict.indices[1]}")
        return 0
    return 1


def _cmd_octagon(args: argparse.Namespace) -> int:
    cfg = PrecisionConfig(digits=args.digits)
    geo = geometry.octagon(args.n, cfg)
    limits = geometry.octagon_limits(cfg)
    print(f"n: {geo.n}")
    print(f"digits: {cfg.digits}")
    print(f"p: ({geo.p[0]}, {geo.p[1]})")
    print(f"q: ({geo.q[0]}, {geo.q[1]})")
    print(f"d: {geo.d}")
    print(f"e: {geo.e}")
    names = ("d_over_f", "d_over_e", "e_over_f")
    ratios = (geo.ratio_d_over_f, geo.ratio_d_over_e, geo.ratio_e_over_f)
    for name, ratio, limit in zip(names, ratios, limits):
        print(f"{name}: {ratio}")
        print(f"limit_{name}: {limit}")
        print(f"deviation_{name}: {ratio - limit}")
    return 0


def _cmd_phi_convergence(args: argparse.Namespace) -> int:
    cfg = PrecisionConfig(digits=args.digits)
    rows = convergence_table(args.n_max, cfg)
    print(f"phi: {geometry.phi(cfg)}")
    for row in rows:
        print(f"{row.n}  {row.ratio}  {row.error}")
    return 0


def _verify_cassini(bound: int) -> int:
    for i in range(bound + 1):
        expected = 1 if i % 2 == 0 else -1
        got = cassini_residual(i)
        if got != expected:
            print(f"verify cassini: FAIL at i={i}: residual {got}, expected {expected}")
            return 1
    print(f"verify cassini: pass (i in 0..{bound})")
    return 0


def _verify_equivalence(bound: int) -> int:
    members = set()
    a, b = 1, 1
    while a <= bound:
        members.add(a)
        a, b = b, a + b
    count = 0
    for beta in range(1, bound + 1):
        by_descent = is_fibonacci_by_descent(beta)
        by_successor = bool(successors(beta).successors)
        by_sequence = beta in members
        if not (by_descent == by_successor == by_sequence):
            print(
                f"verify equivalence: FAIL at beta={beta}: "
                f"descent={by_descent} successors={by_successor} sequence={by_sequence}"
            )
            return 1
        count += by_sequence
    print(f"verify equivalence: pass (beta in 1..{bound}, {count} Fibonacci values)")
    return 0


def _verify_parity(bound: int) -> int:
    hit = find_exact_solution(bound)
    if hit is not None:
        print(f"verify parity: FAIL: beta={hit[0]}, alpha={hit[1]} solves beta*(beta+alpha)=alpha^2")
        return 1
    print(f"verify parity: pass (no exact solution for beta in 1..{bound})")
    return 0


def _verify_convergence(bound: int) -> int:
    digits = max(50, len(str(fib(bound))) + 15)
    rows = convergence_table(bound, PrecisionConfig(digits=digits))
    for n in range(1, bound + 1):
        prev, cur = rows[n - 1].error, rows[n].error
        if not abs(cur) < abs(prev):
            print(f"verify convergence: FAIL at n={n}: |error| {abs(cur)} >= {abs(prev)}")
            return 1
        if (cur > 0) == (prev > 0):
            print(f"verify convergence: FAIL at n={n}: error sign did not alternate")
            return 1
    print(f"verify convergence: pass (n in 1..{bound} at {digits} digits)")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    bound = args.bound if args.bound is not None else _DEFAULT_BOUNDS[args.suite]
    runner = {
        "cassini": _verify_cassini,
        "equivalence": _verify_equivalence,
        "parity": _verify_parity,
        "convergence": _verify_convergence,
    }[args.suite]
    return runner(bound)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hippasus",
        description="Fibonacci numbers via the residual beta*(beta+alpha) - alpha**2: "
        "search, descent, Wasteels criterion, golden-ratio geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fib", help="print F(i) under the 1,1-start indexing")
    p.add_argument("i", type=_nonneg_int)
    p.set_defaults(func=_cmd_fib)

    p = sub.add_parser("table", help="emit the Hippasus pair table for beta <= max-beta")
    p.add_argument("--max-beta", type=_positive_int, required=True)
    p.add_argument("--format", choices=table.FORMATS, default="aligned")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("check", help="report Hippasus status, successors and descent")
    p.add_argument("beta", type=_positive_int)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("descent", help="print the subtractive descent trace")
    p.add_argument("beta", type=_positive_int)
    p.set_defaults(func=_cmd_descent)

    p = sub.add_parser("wasteels", help="test whether x, y are consecutive Fibonacci numbers")
    p.add_argument("x", type=_positive_int)
    p.add_argument("y", type=_positive_int)
    p.set_defaults(func=_cmd_wasteels)

    p = sub.add_parser("octagon", help="octagon geometry at index n with limit deviations")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--digits", type=_positive_int, default=50)
    p.set_defaults(func=_cmd_octagon)

    p = sub.add_parser("phi-convergence", help="quotients F(n+1)/F(n) and their distance to phi")
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--digits", type=_positive_int, default=50)
    p.set_defaults(func=_cmd_phi_convergence)

    p = sub.add_parser("verify", help="run an exhaustive range check")
    p.add_argument("suite", choices=VERIFY_SUITES)
    p.add_argument("--bound", type=_positive_int, default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    # the tool prints and parses arbitrarily large integers; drop the
    # interpreter's int<->str digit guard (present since 3.10.7)
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PrecisionTooLow as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
