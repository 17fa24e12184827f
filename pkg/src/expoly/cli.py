"""Command-line interface.

Usage:
    expoly phi 4                       # coefficients of phi_4
    expoly phi 3 --at -1               # exact value phi_3(-1)
    expoly table bell 8 --format csv   # Bell numbers b_0..b_8
    expoly verify all                  # every identity battery
    expoly transform --f 0,1,1 --x 0.5
    expoly gamma-moment --n 0 --a 0.5 --b 0.5

Data goes to stdout, diagnostics to stderr.  Exit status: 0 when every check
passes, 1 when a check fails, 2 for invalid arguments, 3 for numerical failure.
The default ``--format`` can be set with the ``EXPOLY_FORMAT`` environment
variable.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import exact_numbers as en
from . import gamma_integrals as gi
from .errors import ExpolyError
from .exp_poly import phi
from .mellin import series_transform
from .polynomial import RationalPolynomial, format_exact, to_fraction
from .report import Record, Report, render_value
from .suites import SUITES

__all__ = ["main", "build_parser"]

FORMATS = ("text", "csv", "json")
ENV_FORMAT = "EXPOLY_FORMAT"
TABLE_LIMITS = {"stirling2": 200, "stirling1": 200, "bell": 200, "bernoulli": 100}


class UsageError(Exception):
    pass


def _default_format() -> str:
    fmt = os.environ.get(ENV_FORMAT, "text")
    return fmt if fmt in FORMATS else "text"


def cmd_phi(args: argparse.Namespace) -> tuple[Report, str]:
    n = args.n
    if not 0 <= n <= 100:
        raise UsageError("n must be in 0..100")
    rep = Report("phi", {"n": n, "at": args.at})
    p = phi(n)
    rep.add(Record.value(f"phi_{n}", str(p)))
    rep.add(Record.value("coefficients", ",".join(str(c) for c in p.coeffs)))
    text = str(p)
    if args.at is not None:
        if n > 60:
            raise UsageError("evaluation needs n <= 60")
        x = to_fraction(args.at)
        v = p(x)
        rep.add(Record.value(f"phi_{n}({format_exact(x)})", v))
        text = format_exact(v)
    return rep, text + "\n"


def cmd_table(args: argparse.Namespace) -> tuple[Report, str]:
    kind, n_max = args.kind, args.n_max
    if not 0 <= n_max <= TABLE_LIMITS[kind]:
        raise UsageError(f"n_max for {kind} must be in 0..{TABLE_LIMITS[kind]}")
    rep = Report("table", {"kind": kind, "n_max": n_max})
    lines = []
    if kind in ("bell", "bernoulli"):
        if kind == "bell":
            vals = [en.bell(n) for n in range(n_max + 1)]
            label = "b"
        else:
            vals = [en.bernoulli(n) for n in range(n_max + 1)]
            label = "B"
        for n, v in enumerate(vals):
            rep.add(Record.value(f"{label}_{n}", v))
        lines.append(",".join(render_value(v) for v in vals))
    else:
        row = en.stirling2_row if kind == "stirling2" else en.stirling1_row
        for n in range(n_max + 1):
            r = row(n)
            for k, v in enumerate(r):
                rep.add(Record.value(f"{kind}({n},{k})", v))
            lines.append(",".join(str(v) for v in r))
    return rep, "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> tuple[Report, None]:
    params = {"suite": args.suite, "max": args.max, "max_sum": args.max_sum, "n": args.n,
              "cases": args.cases, "seed": args.seed, "tolerance": args.tolerance}
    rep = Report("verify", params)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name == "poly":
            if not 0 <= args.max <= 40:
                raise UsageError("--max must be in 0..40")
            rep.results += SUITES[name](max_n=args.max)
        elif name == "mellin":
            rep.results += SUITES[name](cases=args.cases, seed=args.seed, tolerance=args.tolerance)
        elif name == "semi-orth":
            if not 2 <= args.max_sum <= 20:
                raise UsageError("--max-sum must be in 2..20")
            rep.results += SUITES[name](max_sum=args.max_sum, tolerance=args.tolerance)
        else:
            if not 0 <= args.n <= 20:
                raise UsageError("--n must be in 0..20")
            rep.results += SUITES[name](n=args.n, tolerance=args.tolerance)
    return rep, None


def cmd_transform(args: argparse.Namespace) -> tuple[Report, None]:
    coeffs = [to_fraction(c) for c in args.f.split(",")]
    f = RationalPolynomial(coeffs)
    tol = 1e-10 if args.tolerance is None else args.tolerance
    rep = Report("transform", {"f": [format_exact(c) for c in coeffs], "x": args.x,
                               "tolerance": tol})
    lhs, rhs = series_transform(f, args.x)
    rep.add(Record.value("lhs", lhs, "series-transform"))
    rep.add(Record.value("rhs", rhs, "series-transform"))
    rep.add(Record.numeric("lhs vs rhs", lhs, rhs, tol, tol, "series-transform"))
    return rep, None


def cmd_gamma_moment(args: argparse.Namespace) -> tuple[Report, None]:
    tol = 1e-8 if args.tolerance is None else args.tolerance
    shift = args.shift
    rep = Report("gamma-moment", {"n": args.n, "a": args.a, "b": args.b, "shift": shift,
                                  "tolerance": tol})
    if args.b is None:
        closed = gi.moment_single_closed(args.n, args.a, shift)
        quad = gi.moment_single_quad(args.n, args.a, shift)
        tag = "gamma-single"
    else:
        closed = gi.moment_pair_closed(args.n, args.a, args.b, shift)
        quad = gi.moment_pair_quad(args.n, args.a, args.b, shift)
        tag = "gamma-pair"
    rep.add(Record.value("closed_form", closed.float_value, tag))
    rep.add(Record.value("quadrature", quad.value, tag))
    rep.add(Record.value("quadrature_error_estimate", quad.abs_error_estimate, tag))
    rep.add(Record.value("truncation_T", quad.truncation_T, tag))
    rep.add(Record.value("evaluations", quad.evaluations, tag))
    rep.add(Record.numeric("quadrature vs closed form", quad.value, closed.float_value,
                           tol, 1e-10, tag))
    return rep, None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help=f"output format (default: ${ENV_FORMAT} or text)")
    common.add_argument("--tolerance", type=float, default=None,
                        help="override the default comparison tolerance")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized batteries")

    parser = argparse.ArgumentParser(prog="expoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", parents=[common], help="coefficients or value of phi_n")
    p.add_argument("n", type=int)
    p.add_argument("--at", default=None, help="exact rational point, e.g. -1 or 3/2")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("table", parents=[common], help="tables of exact numbers")
    p.add_argument("kind", choices=sorted(TABLE_LIMITS))
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run identity batteries")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--max", type=int, default=12, help="total degree bound (poly)")
    p.add_argument("--max-sum", type=int, default=16, help="bound on n+m (semi-orth)")
    p.add_argument("--n", type=int, default=6, help="largest moment order (gamma)")
    p.add_argument("--cases", type=int, default=100, help="random cases (mellin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", parents=[common], help="series transformation check")
    p.add_argument("--f", required=True, help="comma-separated coefficients of f, lowest first")
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("gamma-moment", parents=[common], help="Gamma Fourier moments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, default=None, help="second Gamma factor Gamma(b-it)")
    p.add_argument("--lambda", "--mu", dest="shift", type=float, default=0.0,
                   help="frequency shift (lambda for the single moment, mu for the pair)")
    p.set_defaults(func=cmd_gamma_moment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or _default_format()
    try:
        report, text = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"expoly {args.command}: {exc}", file=sys.stderr)
        return 2
    except (ExpolyError, OverflowError) as exc:
        print(f"expoly {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 3
    if fmt == "json":
        sys.stdout.write(report.to_json())
    elif fmt == "csv":
        sys.stdout.write(report.to_csv())
    else:
        sys.stdout.write(text if text is not None else report.to_text())
    return 0 if report.status == "pass" else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
