"""Command-line front end: ``alttangles {series,asymptotics,oracle,verify}``.

Exit codes: 0 on success or match, 1 on mismatch or failed check, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Callable, Iterator

from .asymptotics import exact_decimal
from .flype import f1_tilde_series, gamma_tilde_series, gamma_tilde_template, tangle_asymptotics
from .matrix_model import bare_model, link_asymptotics, renormalized_model
from .oracle import DiagramFilter, OracleCapError, count_free_energy, count_tangles, count_two_point
from .oracle.counts import FREE_ENERGY_CAP, TANGLE_CAP, TWO_POINT_CAP
from .series import BivariateSeries, PowerSeries
from .skeleton import d_series, g_of_gamma, gamma_template, zeta_of_gamma
from .verify import INJECTIONS, run_checks

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _d(N: int) -> PowerSeries:
    return d_series(renormalized_model(N).gamma)[0]


def _zeta(N: int) -> PowerSeries:
    return d_series(renormalized_model(N).gamma)[1]


# every builder is called with order >= 2 and truncated afterwards
FUNCTIONS: dict[str, Callable[[int], PowerSeries | BivariateSeries]] = {
    "a2": lambda N: bare_model(N).a2_bare,
    "F": lambda N: bare_model(N).F,
    "G2": lambda N: bare_model(N).G2,
    "G4": lambda N: bare_model(N).G4,
    "G4c": lambda N: bare_model(N).G4c,
    "alpha": lambda N: renormalized_model(N).alpha,
    "sigma_prime": lambda N: renormalized_model(N).sigma_prime,
    "Gamma": lambda N: renormalized_model(N).gamma,
    "F1": lambda N: renormalized_model(N).f1,
    "D": _d,
    "zeta": _zeta,
    "g_of_Gamma": g_of_gamma,
    "zeta_of_Gamma": zeta_of_gamma,
    "Gamma_template": gamma_template,
    "Gamma_tilde": gamma_tilde_series,
    "F1_tilde": f1_tilde_series,
    "Gamma_tilde_template": gamma_tilde_template,
}

ASYMPTOTICS = {"links": link_asymptotics, "tangles": tangle_asymptotics}


def format_rational(x: Fraction, text: bool = False) -> str:
    x = Fraction(x)
    if text and x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def series_records(name: str, order: int) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """``((degree,), value)`` from the valuation up, or ``((m, n), value)`` for nonzero template terms."""
    s = FUNCTIONS[name](max(order, 2))
    if isinstance(s, BivariateSeries):
        s = s.truncate(order)
        for key in sorted(s.keys(), key=lambda k: (k[0] + k[1], k[0])):
            if s[key]:
                yield key, s[key]
        return
    s = s.truncate(order)
    for k in range(s.valuation(), order + 1):
        yield (k,), s[k]


def _emit_series(name: str, order: int, fmt: str, digits: int | None, out) -> None:
    records = list(series_records(name, order))
    bivariate = name.endswith("_template")
    if fmt == "json":
        for key, value in records:
            row: dict[str, object] = {"function": name}
            if bivariate:
                row["m"], row["n"] = key
            else:
                row["degree"] = key[0]
            row["value"] = format_rational(value)
            if digits is not None:
                row["decimal"] = exact_decimal(value, digits)
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        head = ["function", "m", "n"] if bivariate else ["function", "degree"]
        writer.writerow(head + ["value"] + (["decimal"] if digits is not None else []))
        for key, value in records:
            row = [name, *key, format_rational(value)]
            if digits is not None:
                row.append(exact_decimal(value, digits))
            writer.writerow(row)
    else:
        for key, value in records:
            label = f"g^{key[0]} zeta^{key[1]}" if bivariate else f"g^{key[0]}"
            line = f"{label}: {format_rational(value, text=True)}"
            if digits is not None:
                line += f" ~ {exact_decimal(value, digits)}"
            out.write(line + "\n")


def cmd_series(args, out) -> int:
    _emit_series(args.function, args.order, args.format, args.digits, out)
    return EXIT_OK


def cmd_asymptotics(args, out) -> int:
    a = ASYMPTOTICS[args.which]()
    if args.format == "json":
        row = {"which": args.which, "radius": str(a.radius), "growth": str(a.growth), "exponent": format_rational(a.exponent)}
        if args.digits is not None:
            row["radius_decimal"] = a.radius_decimal(args.digits)
            row["growth_decimal"] = a.growth_decimal(args.digits)
        out.write(json.dumps(row) + "\n")
        return EXIT_OK
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["which", "quantity", "exact", "decimal"])
        for q, v in (("radius", a.radius), ("growth", a.growth)):
            writer.writerow([args.which, q, str(v), exact_decimal(v, args.digits)])
        return EXIT_OK
    out.write(f"{args.which}\n")
    out.write(f"radius   {a.radius} = {a.radius_decimal(args.digits)}\n")
    out.write(f"growth   {a.growth} = {a.growth_decimal(args.digits)}\n")
    out.write(f"exponent {format_rational(a.exponent, text=True)}\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    n, workers = args.n, args.parallel
    kw = {"labeled": args.labeled, "workers": workers}
    if args.target == "free-energy":
        if args.force:
            kw["cap"] = max(n, FREE_ENERGY_CAP)
        got, want = count_free_energy(n, **kw), bare_model(max(n, 1)).F[n]
    elif args.target == "two-point":
        if args.force:
            kw["cap"] = max(n, TWO_POINT_CAP)
        got, want = count_two_point(n, **kw), bare_model(max(n, 1)).G2[n]
    else:
        if args.force:
            kw["cap"] = max(n, TANGLE_CAP)
        if args.target == "tangles":
            f, want = DiagramFilter.tangles(), renormalized_model(max(n, 1)).gamma[n]
        else:
            f, want = DiagramFilter.both_channels(), _d(max(n, 1))[n]
        got = count_tangles(n, f, **kw)
    ok = Fraction(got) == want
    verdict = "MATCH" if ok else "MISMATCH"
    got_s, want_s = format_rational(got, text=True), format_rational(want, text=True)
    out.write(f"{args.target} n={n}: oracle {got_s}, analytic {want_s}, {verdict}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args, out) -> int:
    results = run_checks(args.order, inject=args.inject)
    failed = 0
    for r in results:
        failed += not r.passed
        detail = f" ({r.detail})" if r.detail else ""
        out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}{detail}\n")
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alttangles", description="Counting alternating links and tangles exactly.")
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ("json", "csv", "text")

    p = sub.add_parser("series", help="coefficients of a generating function")
    p.add_argument("--function", required=True, choices=sorted(FUNCTIONS))
    p.add_argument("--order", type=_nonnegative, default=10)
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--digits", type=_positive, default=None)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("asymptotics", help="radius of convergence and growth constant")
    p.add_argument("--which", choices=sorted(ASYMPTOTICS), default="tangles")
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--digits", type=_positive, default=None)
    p.set_defaults(handler=cmd_asymptotics)

    p = sub.add_parser("oracle", help="compare brute-force diagram counts with the series")
    p.add_argument("--target", required=True, choices=("free-energy", "two-point", "tangles", "2pi"))
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--parallel", type=_positive, default=1, help="worker processes")
    p.add_argument("--force", action="store_true", help="allow n beyond the default cap")
    p.add_argument("--labeled", action="store_true", help="enumerate fully labeled pairings")
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("verify", help="run the full consistency suite")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--inject", choices=INJECTIONS, default=None, help=argparse.SUPPRESS)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.order < 6:
        parser.error("verify needs --order >= 6")
    try:
        return args.handler(args, out)
    except (OracleCapError, ValueError) as exc:
        print(f"alttangles: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
