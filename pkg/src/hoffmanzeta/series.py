"""Rational zeta series sum_{n>=0} zeta(2n) / (4^n * prod_a (2n + a)).

Covers the single-pole series in direct and closed form, the two
product-denominator series behind H(r, s) and T(r, s), and their
partial-fraction recombinations (the B and D sums) in both forms.

Every series starts at n = 0 with zeta(0) = -1/2. The tail after N terms is
bounded by 2 / (3 * 4^(N-1) * prod_a (2N + a)), using zeta(2n) <= zeta(2) < 2.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from .constants import ConstantCache, log2, pi, zeta_int
from .exact import binomial
from .numerics import EvalResult, Route


def kronecker_delta(i, j) -> int:
    return 1 if i == j else 0


def _tail_bound(mp, shifts: Sequence[int], n: int):
    prod = math.prod(2 * n + a for a in shifts)
    return mp.mpf(2) / (3 * mp.mpf(4) ** (n - 1) * prod)


def series_terms(shifts: Sequence[int], cache: ConstantCache) -> Iterator:
    """Yield the terms zeta(2n) / (4^n prod_a (2n + a)) for n = 0, 1, 2, ..."""
    mp = cache.context.mp
    n = 0
    while True:
        denom = mp.mpf(4) ** n * math.prod(2 * n + a for a in shifts)
        yield zeta_int(2 * n, cache) / denom
        n += 1


def partial_sums(shifts: Sequence[int], cache: ConstantCache, count: int) -> list:
    out, acc = [], cache.context.mp.mpf(0)
    for _, term in zip(range(count), series_terms(shifts, cache)):
        acc += term
        out.append(acc)
    return out


def rational_zeta_series(shifts: Sequence[int], cache: ConstantCache,
                         route: Route = Route.LYH_SERIES) -> EvalResult:
    """Sum the series until the tail bound drops below 10^-(target_digits + 2)."""
    shifts = tuple(shifts)
    if any(a <= 0 for a in shifts):
        raise ValueError("denominator shifts must be positive")
    ctx = cache.context
    mp = ctx.mp
    tol = mp.mpf(10) ** (-(ctx.target_digits + 2))
    total = mp.mpf(0)
    n = 0
    for term in series_terms(shifts, cache):
        total += term
        n += 1
        bound = _tail_bound(mp, shifts, n)
        if bound < tol:
            return EvalResult(total, bound, route, n)


def lupu_series_direct(p: int, cache: ConstantCache) -> EvalResult:
    """sum_{n>=0} zeta(2n) / ((2n + p) 4^n), summed term by term."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    return cache.get(("lupu", p), lambda: rational_zeta_series((p,), cache, Route.LUPU_DIRECT))


def lupu_closed_form(p: int, cache: ConstantCache) -> EvalResult:
    """Closed form of the single-pole series in log 2 and odd zeta values."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    ctx = cache.context
    pi_ = pi(cache)
    value = -log2(cache) / 2
    for k in range(1, p // 2 + 1):
        coeff = Fraction(math.factorial(p) * (-1) ** k * (4 ** k - 1),
                         2 * math.factorial(p - 2 * k) * 4 ** k)
        value -= ctx.mpf(coeff) * zeta_int(2 * k + 1, cache) / pi_ ** (2 * k)
    if kronecker_delta(p // 2, Fraction(p, 2)):
        coeff = Fraction(math.factorial(p) * (-1) ** (p // 2), 2)
        value -= ctx.mpf(coeff) * zeta_int(p + 1, cache) / pi_ ** p
    return EvalResult(value, ctx.mp.mpf(0), Route.LUPU_CLOSED, 0)


def a_series(r: int, s: int, cache: ConstantCache) -> EvalResult:
    """A(r,s) = sum_n zeta(2n) / (4^n prod_{i=2}^{2s+3} (2n + 2r + i))."""
    _check_rs(r, s)
    return rational_zeta_series([2 * r + i for i in range(2, 2 * s + 4)], cache)


def c_series(r: int, s: int, cache: ConstantCache) -> EvalResult:
    """C(r,s) = sum_n zeta(2n) / (4^n prod_{i=1}^{2s+2} (2n + 2r + i))."""
    _check_rs(r, s)
    return rational_zeta_series([2 * r + i for i in range(1, 2 * s + 3)], cache)


def _check_rs(r: int, s: int) -> None:
    if r < 0 or s < 0:
        raise ValueError(f"r and s must be nonnegative, got r={r}, s={s}")


def _combine_lupu(weights: dict, cache: ConstantCache, route: Route) -> EvalResult:
    mp = cache.context.mp
    value, tail, terms = mp.mpf(0), mp.mpf(0), 0
    for p, w in weights.items():
        part = lupu_series_direct(p, cache)
        value += w * part.value
        tail += abs(w) * part.tail_bound
        terms += part.terms_used
    return EvalResult(value, tail, route, terms)


def b_sum_definition(r: int, s: int, cache: ConstantCache) -> EvalResult:
    """B(r,s) = sum_{i=2}^{2s+3} (-1)^i C(2s+1, i-2) L(2r+i), L the single-pole series."""
    _check_rs(r, s)
    weights = {2 * r + i: (-1) ** i * binomial(2 * s + 1, i - 2) for i in range(2, 2 * s + 4)}
    return _combine_lupu(weights, cache, Route.B_DEF)


def d_sum_definition(r: int, s: int, cache: ConstantCache) -> EvalResult:
    """D(r,s) = sum_{i=1}^{2s+2} (-1)^{i-1} C(2s+1, i-1) L(2r+i)."""
    _check_rs(r, s)
    weights = {2 * r + i: (-1) ** (i - 1) * binomial(2 * s + 1, i - 1) for i in range(1, 2 * s + 3)}
    return _combine_lupu(weights, cache, Route.D_DEF)


def b_closed_coefficient(k: int, r: int, s: int) -> Fraction:
    """Rational q_k with B(r,s) = sum_k q_k zeta(2k+1) / pi^{2k}."""
    sign = (-1) ** k
    fact = math.factorial(2 * k)
    first = Fraction(sign * (4 ** k - 1) * fact * binomial(2 * r + 2, 2 * k - 2 * s - 1), 2 * 4 ** k)
    second = Fraction(fact * sign * binomial(2 * s + 1, 2 * k - 2 * r - 2), 2)
    return first - second


def d_closed_coefficient(k: int, r: int, s: int) -> Fraction:
    """Rational q_k with D(r,s) = sum_k q_k zeta(2k+1) / pi^{2k}."""
    sign = (-1) ** (k + 1)
    fact = math.factorial(2 * k)
    first = Fraction(sign * (4 ** k - 1) * fact * binomial(2 * r + 1, 2 * k - 2 * s - 1), 2 * 4 ** k)
    second = Fraction(fact * sign * binomial(2 * s + 1, 2 * k - 2 * r - 1), 2)
    return -first - second


def _closed_sum(coefficient, r: int, s: int, cache: ConstantCache, route: Route) -> EvalResult:
    _check_rs(r, s)
    ctx = cache.context
    pi_ = pi(cache)
    value = ctx.mp.mpf(0)
    for k in range(1, r + s + 2):
        q = coefficient(k, r, s)
        if q:
            value += ctx.mpf(q) * zeta_int(2 * k + 1, cache) / pi_ ** (2 * k)
    return EvalResult(value, ctx.mp.mpf(0), route, 0)


def b_sum_closed(r: int, s: int, cache: ConstantCache) -> EvalResult:
    return _closed_sum(b_closed_coefficient, r, s, cache, Route.B_CLOSED)


def d_sum_closed(r: int, s: int, cache: ConstantCache) -> EvalResult:
    return _closed_sum(d_closed_coefficient, r, s, cache, Route.D_CLOSED)
