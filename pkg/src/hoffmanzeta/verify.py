"""Batch verification: route comparisons over an (r, s) grid and exhaustive exact checks."""
from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import closed_forms, direct, exact, series
from .constants import ConstantCache, zeta_int
from .numerics import ConfigurationError, PrecisionContext, agree_digits

ROUTES = ("zagier", "lyh", "direct", "murakami", "t-lyh", "t-direct", "k-equiv", "b", "d")
DEFAULT_CUTOFF = 10 ** 5


@dataclass
class ComparisonRecord:
    label: str
    lhs_route: str
    rhs_route: str
    lhs_value: str
    rhs_value: str
    abs_diff: str
    budget: str
    agree_digits: int
    passed: bool
    interval: list | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        if d["interval"] is None:
            del d["interval"]
        return d


@dataclass
class ExactCheck:
    name: str
    parameters: dict
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "parameters": self.parameters, "pass": self.passed}


@dataclass
class VerificationReport:
    context: dict = field(default_factory=dict)
    grid: dict = field(default_factory=dict)
    records: list = field(default_factory=list)
    exact_checks: list = field(default_factory=list)
    wall_time: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        outcomes = [r.passed for r in self.records] + [c.passed for c in self.exact_checks]
        passed = sum(outcomes)
        return {"total": len(outcomes), "passed": passed, "failed": len(outcomes) - passed}

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.context = self.context or other.context
        self.grid = self.grid or other.grid
        self.records = sorted(self.records + other.records, key=lambda r: r.label)
        self.exact_checks = self.exact_checks + other.exact_checks
        self.wall_time = {**self.wall_time, **other.wall_time}
        return self

    def to_dict(self) -> dict:
        return {
            "context": self.context,
            "grid": self.grid,
            "records": [r.to_dict() for r in self.records],
            "exact_checks": [c.to_dict() for c in self.exact_checks],
            "summary": self.summary,
            "wall_time": self.wall_time,
        }


def _context_echo(ctx: PrecisionContext) -> dict:
    return {"digits": ctx.target_digits, "guard": ctx.guard_digits, "working_bits": ctx.working_bits}


def _sci(ctx: PrecisionContext, x) -> str:
    return ctx.mp.nstr(x, 8, strip_zeros=False, min_fixed=1, max_fixed=0)


def compare(label: str, lhs, rhs, ctx: PrecisionContext, lhs_route: str, rhs_route: str,
            extra_budget=0) -> ComparisonRecord:
    """Symmetric comparison with budget = extra_budget + 10^-digits * max(1, |lhs|, |rhs|)."""
    mp = ctx.mp
    diff = abs(lhs - rhs)
    budget = extra_budget + ctx.epsilon * max(mp.mpf(1), abs(lhs), abs(rhs))
    return ComparisonRecord(
        label=label, lhs_route=lhs_route, rhs_route=rhs_route,
        lhs_value=ctx.to_str(lhs), rhs_value=ctx.to_str(rhs),
        abs_diff=_sci(ctx, diff), budget=_sci(ctx, budget),
        agree_digits=agree_digits(lhs, rhs, ctx), passed=bool(diff <= budget))


def contain(label: str, value, oracle, ctx: PrecisionContext, lhs_route: str) -> ComparisonRecord:
    """Check value in [oracle.value, oracle.value + oracle.tail_bound], widened by 10^-digits.

    Reported as a comparison against the interval midpoint with half its width
    as the budget, so ``pass == (abs_diff <= budget)`` still holds.
    """
    half = oracle.tail_bound / 2
    mid = oracle.value + half
    rec = compare(label, value, mid, ctx, lhs_route, "direct", extra_budget=half)
    rec.interval = [ctx.to_str(oracle.value), ctx.to_str(oracle.upper)]
    return rec


def _cell_records(r: int, s: int, routes: frozenset, cache: ConstantCache, cutoff: int) -> list:
    ctx = cache.context
    tag = f"r={r} s={s}"
    out = []
    if routes & {"zagier", "lyh", "direct"}:
        hz = closed_forms.h_zagier(r, s, cache)
        if "direct" in routes and r == 0 and s == 0:
            # the defining sum has an exact value in the base cell
            out.append(compare(f"H zagier-vs-zeta(3) {tag}", hz.value, zeta_int(3, cache), ctx,
                               "zagier", "constant"))
        if {"zagier", "lyh"} <= routes:
            hl = closed_forms.h_lyh(r, s, cache)
            out.append(compare(f"H zagier-vs-lyh {tag}", hz.value, hl.value, ctx, "zagier",
                               "lyh-series", extra_budget=hl.tail_bound))
        if "direct" in routes:
            oracle = direct.mzv_direct(direct.hoffman_index(r, s, "zeta"), cutoff, ctx, cache)
            out.append(contain(f"H zagier-in-direct {tag}", hz.value, oracle, ctx, "zagier"))
    if routes & {"murakami", "t-lyh", "t-direct", "k-equiv"}:
        tm = closed_forms.t_murakami(r, s, cache)
        if "t-direct" in routes and r == 0 and s == 0:
            out.append(compare(f"T murakami-vs-7/8*zeta(3) {tag}", tm.value,
                               zeta_int(3, cache) * 7 / 8, ctx, "murakami", "constant"))
        if {"murakami", "t-lyh"} <= routes:
            tl = closed_forms.t_lyh(r, s, cache)
            out.append(compare(f"T murakami-vs-lyh {tag}", tm.value, tl.value, ctx, "murakami",
                               "lyh-series", extra_budget=tl.tail_bound))
        if "t-direct" in routes:
            oracle = direct.tvalue_direct(direct.hoffman_index(r, s, "t"), cutoff, ctx, cache)
            out.append(contain(f"T murakami-in-direct {tag}", tm.value, oracle, ctx, "murakami"))
        if "k-equiv" in routes:
            km = closed_forms.k_murakami(r, s, cache)
            out.append(compare(f"K murakami-vs-scaled-T {tag}", km.value,
                               2 ** (2 * r + 2 * s + 3) * tm.value, ctx, "murakami", "murakami"))
    fact = math.factorial(2 * s + 1)
    if "b" in routes:
        bd = series.b_sum_definition(r, s, cache)
        bc = series.b_sum_closed(r, s, cache)
        a = series.a_series(r, s, cache)
        out.append(compare(f"B def-vs-closed {tag}", bd.value, bc.value, ctx, "b-def", "b-closed",
                           extra_budget=bd.tail_bound))
        out.append(compare(f"B scaled-a-vs-def {tag}", fact * a.value, bd.value, ctx, "lyh-series",
                           "b-def", extra_budget=fact * a.tail_bound + bd.tail_bound))
    if "d" in routes:
        dd = series.d_sum_definition(r, s, cache)
        dc = series.d_sum_closed(r, s, cache)
        c = series.c_series(r, s, cache)
        out.append(compare(f"D def-vs-closed {tag}", dd.value, dc.value, ctx, "d-def", "d-closed",
                           extra_budget=dd.tail_bound))
        out.append(compare(f"D scaled-c-vs-def {tag}", fact * c.value, dd.value, ctx, "lyh-series",
                           "d-def", extra_budget=fact * c.tail_bound + dd.tail_bound))
    return out


def parse_routes(routes) -> frozenset:
    if routes is None:
        return frozenset(ROUTES)
    if isinstance(routes, str):
        routes = [x.strip() for x in routes.split(",") if x.strip()]
    unknown = sorted(set(routes) - set(ROUTES))
    if unknown:
        raise ConfigurationError(f"unknown route(s): {', '.join(unknown)}; known: {', '.join(ROUTES)}")
    return frozenset(routes)


_worker_cache: ConstantCache | None = None


def _worker_cell(args):
    r, s, routes, cutoff = args
    return _cell_records(r, s, routes, _worker_cache, cutoff)


def run_grid(rmax: int, smax: int, context: PrecisionContext, routes=None,
             cutoff: int = DEFAULT_CUTOFF, jobs: int = 1) -> VerificationReport:
    """Compare every requested route pair on each cell of [0, rmax] x [0, smax]."""
    global _worker_cache
    if rmax < 0 or smax < 0:
        raise ConfigurationError("rmax and smax must be nonnegative")
    routes = parse_routes(routes)
    start = time.perf_counter()
    weight = rmax + smax + 1
    # every zeta value a cell can touch, so workers only read the cache
    cache = ConstantCache(context).warm(max_odd_zeta=2 * weight + 1)
    if routes & {"lyh", "t-lyh", "b", "d"}:
        for p in range(1, 2 * rmax + 2 * smax + 4):
            series.lupu_series_direct(p, cache)
    cells = [(r, s, routes, cutoff) for r in range(rmax + 1) for s in range(smax + 1)]
    records = []
    if routes and jobs > 1 and len(cells) > 1:
        _worker_cache = cache
        try:
            pool_ctx = multiprocessing.get_context("fork")
            with ProcessPoolExecutor(max_workers=jobs, mp_context=pool_ctx) as pool:
                for recs in pool.map(_worker_cell, cells):
                    records.extend(recs)
        finally:
            _worker_cache = None
    elif routes:
        for r, s, rts, n in cells:
            records.extend(_cell_records(r, s, rts, cache, n))
    records.sort(key=lambda rec: rec.label)
    return VerificationReport(
        context=_context_echo(context),
        grid={"rmax": rmax, "smax": smax, "routes": sorted(routes), "cutoff": cutoff},
        records=records,
        wall_time={"grid": round(time.perf_counter() - start, 3)})


def _random_rationals(rng: random.Random) -> list:
    return [Fraction(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(rng.randint(1, 8))]


def run_exact_checks(pf_max_m: int = 12, bin_rmax: int = 20, bin_smax: int = 10,
                     bern_max: int = 40, shift_rmax: int = 10, shift_smax: int = 10,
                     delta_cases: int = 1000, seed: int = 0) -> VerificationReport:
    """Exhaustive exact checks of the finite identities over parameter boxes."""
    if min(pf_max_m, bin_rmax, bin_smax, bern_max) < 1:
        raise ConfigurationError("exact-check bounds must be positive")
    start = time.perf_counter()
    checks = []

    def add(name, passed, **params):
        checks.append(ExactCheck(name, params, bool(passed)))

    for m in range(2, pf_max_m + 1):
        for j in range(1, m):
            add("partial_fraction", exact.check_partial_fraction(j, m), j=j, m=m)
            add("alternating_prefix", exact.alternating_binomial_prefix(j, m) == (-1) ** (m - j - 1),
                j=j, m=m)

    for r in range(1, bin_rmax + 1):
        for s in range(1, bin_smax + 1):
            f_expanded = exact.generating_polynomial(r, s)
            f_factored = exact.generating_polynomial_factored(r, s)
            add("generating_polynomial", f_expanded == f_factored, r=r, s=s)
            for k in range(1, (r + 1 + 2 * s) // 2 + 1):
                coeff = f_expanded.coefficient(2 * k)
                add("binomial_identity_full",
                    exact.check_binomial_identity_full(r, s, k)
                    and coeff == exact.binomial_identity_rhs(r, s, k), r=r, s=s, k=k)
                add("binomial_identity_tail", exact.check_binomial_identity_tail(r, s, k),
                    r=r, s=s, k=k)

    for r in range(shift_rmax + 1):
        for s in range(shift_smax + 1):
            for k in range(1, r + s + 2):
                for variant in ("full", "tail"):
                    for shift in (1, 2):
                        add("shifted_binomial_sum",
                            exact.check_shifted_binomial_sum(r, s, k, variant, shift),
                            r=r, s=s, k=k, variant=variant, shift=shift)

    rng = random.Random(seed)
    for case in range(delta_cases):
        values = _random_rationals(rng)
        a = rng.randrange(len(values))
        add("delta_filter", exact.check_delta_filter(values, a), case=case, length=len(values), a=a)

    for n in range(2, bern_max + 1):
        if n % 2:
            add("bernoulli_odd_zero", exact.bernoulli(n) == 0, n=n)
        else:
            add("von_staudt_clausen", exact.check_von_staudt_clausen(n), n=n)

    return VerificationReport(
        grid={"pf_max_m": pf_max_m, "bin_rmax": bin_rmax, "bin_smax": bin_smax,
              "bern_max": bern_max, "shift_rmax": shift_rmax, "shift_smax": shift_smax,
              "delta_cases": delta_cases, "seed": seed},
        exact_checks=checks,
        wall_time={"exact_checks": round(time.perf_counter() - start, 3)})


RECORD_COLUMNS = ("label", "lhs_route", "rhs_route", "lhs_value", "rhs_value", "abs_diff",
                  "budget", "agree_digits", "pass")
EXACT_COLUMNS = ("name", "parameters", "pass")


def render_report(report: VerificationReport, fmt: str = "json") -> str:
    """Serialize a report.

    CSV holds the comparison records; a report with exact checks only
    (``verify lemmas``) is written as the exact-check table instead.
    """
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt != "csv":
        raise ConfigurationError(f"unknown report format {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if report.records or not report.exact_checks:
        writer.writerow(RECORD_COLUMNS)
        for rec in report.records:
            d = rec.to_dict()
            writer.writerow([d[c] for c in RECORD_COLUMNS])
    else:
        writer.writerow(EXACT_COLUMNS)
        for chk in report.exact_checks:
            writer.writerow([chk.name, json.dumps(chk.parameters, sort_keys=True), chk.passed])
    return buf.getvalue()


def emit_report(report: VerificationReport, fmt: str = "json", destination=None) -> None:
    """Write the report to a path, or to stdout when ``destination`` is None or '-'."""
    text = render_report(report, fmt)
    if destination is None or destination == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
