"""Command-line entry point.

    hoffmanzeta verify grid --rmax R --smax S --digits D [--guard G] [--routes LIST] [--out PATH] [--format json|csv]
    hoffmanzeta verify lemmas [--pf-max M] [--bin-rmax R] [--bin-smax S] [--bern-max B]
    hoffmanzeta eval h --r R --s S --route zagier|lyh|direct --digits D
    hoffmanzeta eval t --r R --s S --route murakami|lyh|direct --digits D
    hoffmanzeta eval zeta --m M --digits D
    hoffmanzeta eval lupu --p P --route direct|closed --digits D

Exit codes: 0 all checks pass, 1 verification failure, 2 usage,
configuration or I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import closed_forms, direct, series
from .constants import ConstantCache, zeta_euler_maclaurin, zeta_int
from .numerics import ConfigurationError, EvalResult, Route, make_context
from .verify import DEFAULT_CUTOFF, ROUTES, emit_report, run_exact_checks, run_grid

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _precision_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--digits", type=int, default=50, help="target decimal digits (default 50)")
    p.add_argument("--guard", type=int, default=10, help="guard digits (default 10)")


def _output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hoffmanzeta",
        description="Multi-route verification of H(r,s) and T(r,s) closed forms.")
    top = parser.add_subparsers(dest="command", required=True)

    verify = top.add_parser("verify", help="batch verification").add_subparsers(dest="what", required=True)
    grid = verify.add_parser("grid", help="compare routes over an (r, s) grid")
    grid.add_argument("--rmax", type=int, default=4)
    grid.add_argument("--smax", type=int, default=4)
    grid.add_argument("--routes", default=",".join(ROUTES),
                      help=f"comma-separated subset of {','.join(ROUTES)}")
    grid.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF,
                      help="direct-oracle truncation N (default 10^5)")
    grid.add_argument("--jobs", type=int, default=1, help="worker processes")
    _precision_args(grid)
    _output_args(grid)

    lemmas = verify.add_parser("lemmas", help="exhaustive exact identity checks")
    lemmas.add_argument("--pf-max", type=int, default=12)
    lemmas.add_argument("--bin-rmax", type=int, default=20)
    lemmas.add_argument("--bin-smax", type=int, default=10)
    lemmas.add_argument("--bern-max", type=int, default=40)
    lemmas.add_argument("--shift-rmax", type=int, default=10)
    lemmas.add_argument("--shift-smax", type=int, default=10)
    lemmas.add_argument("--delta-cases", type=int, default=1000)
    lemmas.add_argument("--seed", type=int, default=0)
    _output_args(lemmas)

    ev = top.add_parser("eval", help="evaluate a single quantity").add_subparsers(dest="what", required=True)
    for name, routes, default in (("h", ("zagier", "lyh", "direct"), "zagier"),
                                  ("t", ("murakami", "lyh", "direct"), "murakami")):
        p = ev.add_parser(name, help=f"{name.upper()}(r, s)")
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--route", choices=routes, default=default)
        p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
        _precision_args(p)
    p = ev.add_parser("zeta", help="Riemann zeta at an integer")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--route", choices=("default", "euler-maclaurin"), default="default")
    _precision_args(p)
    p = ev.add_parser("lupu", help="single-pole rational zeta series")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--route", choices=("direct", "closed"), default="direct")
    _precision_args(p)
    return parser


def _evaluate(args) -> tuple[str, EvalResult]:
    ctx = make_context(args.digits, args.guard)
    cache = ConstantCache(ctx)
    if args.what in ("h", "t"):
        if args.r < 0 or args.s < 0:
            raise ConfigurationError("r and s must be nonnegative")
        label = f"{args.what.upper()}({args.r},{args.s})"
        if args.route == "direct":
            index = direct.hoffman_index(args.r, args.s, "zeta" if args.what == "h" else "t")
            fn = direct.mzv_direct if args.what == "h" else direct.tvalue_direct
            return label, fn(index, args.cutoff, ctx, cache)
        fn = {("h", "zagier"): closed_forms.h_zagier, ("h", "lyh"): closed_forms.h_lyh,
              ("t", "murakami"): closed_forms.t_murakami, ("t", "lyh"): closed_forms.t_lyh}
        return label, fn[args.what, args.route](args.r, args.s, cache)
    if args.what == "zeta":
        if args.m == 1 or args.m < 0:
            raise ConfigurationError("zeta is available for m = 0 or m >= 2")
        if args.route == "euler-maclaurin":
            return f"zeta({args.m})", zeta_euler_maclaurin(args.m, ctx)
        return f"zeta({args.m})", EvalResult(zeta_int(args.m, cache), 0, Route.CONSTANT, 0)
    if args.p < 1:
        raise ConfigurationError("p must be a positive integer")
    fn = series.lupu_series_direct if args.route == "direct" else series.lupu_closed_form
    return f"L({args.p})", fn(args.p, cache)


def _run(args) -> int:
    if args.command == "eval":
        label, res = _evaluate(args)
        ctx = make_context(args.digits, args.guard)
        out = {
            "quantity": label,
            "route": str(res.route),
            "value": ctx.to_str(res.value),
            "tail_bound": ctx.to_str(res.tail_bound, 8),
            "terms_used": res.terms_used,
            "digits": ctx.target_digits,
        }
        print(json.dumps(out, indent=2))
        return EXIT_OK
    if args.what == "grid":
        ctx = make_context(args.digits, args.guard)
        report = run_grid(args.rmax, args.smax, ctx, args.routes, cutoff=args.cutoff, jobs=args.jobs)
    else:
        report = run_exact_checks(args.pf_max, args.bin_rmax, args.bin_smax, args.bern_max,
                                  args.shift_rmax, args.shift_smax, args.delta_cases, args.seed)
    emit_report(report, args.format, args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _run(args)
    except (ConfigurationError, ValueError) as exc:
        print(f"hoffmanzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hoffmanzeta: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
