"""Command-line front end.

Subcommands: cg, threej, sumrule, char, integrals-check. All angular momenta
and projections cross this boundary as doubled integers (two_j = 2j), which
is unambiguous for half-integer spins.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or domain
error.
"""

from __future__ import annotations

import argparse
import math
import sys

from .characters import gen_character_via_cg, gen_character_via_gegenbauer
from .errors import DegenerateCase, DomainError
from .exact import HalfInt
from .integrals import moment_halfweight, quad_gauss, sin4_fourier
from .report import (
    build_document,
    document_to_json,
    records_to_csv,
    run_cells,
    summary_line,
)
from .sumrule import Form, sweep_cells, weight_exact
from .wigner import ThreeJArgs, clebsch_gordan, wigner_3j

_SIX = ("two_j1", "two_m1", "two_j2", "two_m2", "two_j3", "two_m3")


def _print_value(value) -> None:
    print(str(value))
    print(f"{value.to_float():.15g}")


def cmd_cg(args: argparse.Namespace) -> int:
    value = clebsch_gordan(
        HalfInt(args.two_j1), HalfInt(args.two_m1),
        HalfInt(args.two_j2), HalfInt(args.two_m2),
        HalfInt(args.two_j3), HalfInt(args.two_m3),
    )
    _print_value(value)
    return 0


def cmd_threej(args: argparse.Namespace) -> int:
    value = wigner_3j(ThreeJArgs(
        HalfInt(args.two_j1), HalfInt(args.two_j2), HalfInt(args.two_j3),
        HalfInt(args.two_m1), HalfInt(args.two_m2), HalfInt(args.two_m3),
    ))
    _print_value(value)
    return 0


def _sumrule_cells(args: argparse.Namespace, parser: argparse.ArgumentParser):
    forms = {"cg": [Form.CG], "3j": [Form.THREEJ], "both": list(Form)}[args.form]
    if args.two_j_max is not None:
        if args.k != "all":
            parser.error("--k requires --two-j; a --two-j-max run sweeps all k")
        return [c for c in sweep_cells(args.two_j_max, k_extra=2) if c[2] in forms]
    two_j = args.two_j
    if two_j < 0:
        raise DomainError(f"--two-j must be >= 0, got {two_j}")
    if args.k == "all":
        ks = range(0, two_j + 3)
    else:
        ks = [int(args.k)]
    return [(two_j, k, form) for k in ks for form in forms]


def cmd_sumrule(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cells = _sumrule_cells(args, parser)
    records = run_cells(cells, mode=args.mode, threads=args.threads)
    parameters = {
        "two_j": args.two_j,
        "two_j_max": args.two_j_max,
        "k": args.k,
        "form": args.form,
        "mode": args.mode,
    }
    document = build_document(parameters, records)
    if args.out:
        if args.format == "json":
            text = document_to_json(document)
        else:
            text = records_to_csv(records)
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    print(summary_line(records))
    return 0 if document["summary"]["failed"] == 0 else 1


def cmd_char(args: argparse.Namespace) -> int:
    j = HalfInt(args.two_j)
    sym = gen_character_via_gegenbauer(j, args.k)  # validates 0 <= k <= 2j
    t_count = args.omega_grid
    if t_count < 1:
        raise DomainError(f"--omega-grid must be >= 1, got {t_count}")
    print(f"{'omega':>18} {'gegenbauer':>22} {'cg':>22} {'abs_diff':>12}")
    for t in range(1, t_count + 1):
        omega = 2.0 * math.pi * t / (t_count + 1)
        via_poly = sym(omega)
        via_cg = gen_character_via_cg(j, args.k, omega)
        print(f"{omega:18.12f} {via_poly:22.15e} {via_cg:22.15e} {abs(via_poly - via_cg):12.3e}")
    return 0


def cmd_integrals_check(args: argparse.Namespace) -> int:
    failed = 0

    def check(label: str, ok: bool) -> None:
        nonlocal failed
        print(f"{'OK  ' if ok else 'FAIL'} {label}")
        if not ok:
            failed += 1

    # monomial moments vs quadrature in the smooth half-angle variable
    for p in range(0, 9, 2):
        for q in range(0, 4):
            exact = moment_halfweight(p, q).to_float()
            quad = quad_gauss(
                lambda eta: math.cos(eta) ** p * math.sin(eta) ** (2 * q + 2),
                0.0, math.pi, 48,
            )
            check(
                f"moment p={p} q={q}: exact={exact:.15g} quad={quad.value:.15g}",
                abs(exact - quad.value) <= 1e-10 * (1.0 + abs(exact)),
            )

    # Fourier integral of sin^4 vs quadrature of the real part
    for d in range(-4, 5):
        exact = sin4_fourier(d).to_float()
        quad = quad_gauss(
            lambda eta: math.cos(2 * d * eta) * math.sin(eta) ** 4, 0.0, math.pi, 48
        )
        check(
            f"sin4 fourier d={d}: exact={exact:.15g} quad={quad.value:.15g}",
            abs(exact - quad.value) <= 1e-10,
        )

    # exact link between the Fourier integral and the Gamma weights
    from fractions import Fraction

    for d in range(-10, 11):
        expected = Fraction(3, 2) * (-1 if d % 2 else 1) * weight_exact(d)
        check(
            f"weight link d={d}",
            sin4_fourier(d).coefficient == expected,
        )

    print(f"{'FAILED' if failed else 'passed'}: {failed} failures" if failed else "all checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genchar",
        description="Exact coupling coefficients, generalized characters, and sum-rule verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cg = sub.add_parser("cg", help="one Clebsch-Gordan coefficient <j1 m1 j2 m2 | j3 m3>")
    for name in _SIX:
        p_cg.add_argument(name, type=int, help=f"doubled value of {name[4:]}")
    p_cg.set_defaults(func=cmd_cg)

    p_3j = sub.add_parser("threej", help="one Wigner 3j symbol (j1 j2 j3; m1 m2 m3)")
    for name in ("two_j1", "two_j2", "two_j3", "two_m1", "two_m2", "two_m3"):
        p_3j.add_argument(name, type=int, help=f"doubled value of {name[4:]}")
    p_3j.set_defaults(func=cmd_threej)

    p_sum = sub.add_parser("sumrule", help="verify the weighted two-projection sum rule")
    which = p_sum.add_mutually_exclusive_group(required=True)
    which.add_argument("--two-j", type=int, dest="two_j", default=None, help="single doubled spin")
    which.add_argument("--two-j-max", type=int, dest="two_j_max", default=None,
                       help="sweep all doubled spins 1..N (k up to 2j+2)")
    p_sum.add_argument("--k", default="all", help='order k, or "all" (default)')
    p_sum.add_argument("--form", choices=("cg", "3j", "both"), default="both")
    p_sum.add_argument("--mode", choices=("exact", "float"), default="exact")
    p_sum.add_argument("--out", default=None, help="write the report document to this path")
    p_sum.add_argument("--format", choices=("json", "csv"), default="json")
    p_sum.add_argument("--threads", type=int, default=1, help="worker count (does not affect output)")
    p_sum.set_defaults(func=None)  # dispatched explicitly (needs the parser for usage errors)

    p_char = sub.add_parser("char", help="tabulate a generalized character by two routes")
    p_char.add_argument("--two-j", type=int, required=True, dest="two_j")
    p_char.add_argument("--k", type=int, required=True)
    p_char.add_argument("--omega-grid", type=int, required=True, dest="omega_grid",
                        help="number of uniform angles in (0, 2pi)")
    p_char.set_defaults(func=cmd_char)

    p_int = sub.add_parser("integrals-check", help="cross-check exact integrals against quadrature")
    p_int.set_defaults(func=cmd_integrals_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sumrule":
            return cmd_sumrule(args, parser)
        return args.func(args)
    except (DomainError, DegenerateCase) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
