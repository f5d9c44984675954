"""Finite formulas for H(r,s) = zeta({2}^r, 3, {2}^s) and T(r,s) = t({2}^r, 3, {2}^s).

Zagier's and Murakami's coefficients are exact rationals, promoted to the
working precision once per term. The ``*_lyh`` evaluators rescale the
product-denominator zeta series and carry their tail bounds along.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constants import ConstantCache, pi, t_all_twos, zeta_all_twos, zeta_int
from .exact import binomial
from .numerics import EvalResult, Route
from .series import a_series, c_series


def _check_k(k: int, r: int, s: int) -> None:
    if r < 0 or s < 0:
        raise ValueError(f"r and s must be nonnegative, got r={r}, s={s}")
    if not 1 <= k <= r + s + 1:
        raise ValueError(f"k={k} outside [1, {r + s + 1}]")


def zagier_coeff(k: int, r: int, s: int) -> Fraction:
    """c = C(2k, 2r+2) - (1 - 4^-k) C(2k, 2s+1)."""
    _check_k(k, r, s)
    return binomial(2 * k, 2 * r + 2) - (1 - Fraction(1, 4 ** k)) * binomial(2 * k, 2 * s + 1)


def murakami_coeff(k: int, r: int, s: int) -> Fraction:
    """d = C(2k, 2r+1) + (1 - 4^-k) C(2k, 2s+1)."""
    _check_k(k, r, s)
    return binomial(2 * k, 2 * r + 1) + (1 - Fraction(1, 4 ** k)) * binomial(2 * k, 2 * s + 1)


@dataclass(frozen=True)
class CoefficientRow:
    r: int
    s: int
    k: int
    c: Fraction
    d: Fraction

    @classmethod
    def build(cls, k: int, r: int, s: int) -> "CoefficientRow":
        return cls(r, s, k, zagier_coeff(k, r, s), murakami_coeff(k, r, s))


def coefficient_table(r: int, s: int) -> list[CoefficientRow]:
    return [CoefficientRow.build(k, r, s) for k in range(1, r + s + 2)]


def h_zagier(r: int, s: int, cache: ConstantCache) -> EvalResult:
    """H(r,s) = 2 sum_k (-1)^k c_k zeta(2k+1) zeta({2}^{r+s+1-k})."""
    ctx = cache.context
    total = ctx.mp.mpf(0)
    for k in range(1, r + s + 2):
        c = zagier_coeff(k, r, s)
        total += ctx.mpf(2 * (-1) ** k * c) * zeta_int(2 * k + 1, cache) * zeta_all_twos(r + s + 1 - k, cache)
    return EvalResult(total, ctx.mp.mpf(0), Route.ZAGIER, 0)


def t_murakami(r: int, s: int, cache: ConstantCache) -> EvalResult:
    """T(r,s) = sum_k (-1)^{k-1} d_k 4^-k zeta(2k+1) t({2}^{r+s+1-k})."""
    ctx = cache.context
    total = ctx.mp.mpf(0)
    for k in range(1, r + s + 2):
        d = murakami_coeff(k, r, s)
        total += ctx.mpf((-1) ** (k - 1) * d / 4 ** k) * zeta_int(2 * k + 1, cache) * t_all_twos(r + s + 1 - k, cache)
    return EvalResult(total, ctx.mp.mpf(0), Route.MURAKAMI, 0)


def k_all_twos(d: int, cache: ConstantCache):
    """K(d) = 2^{2d} t({2}^d)."""
    return 4 ** d * t_all_twos(d, cache)


def k_murakami(r: int, s: int, cache: ConstantCache) -> EvalResult:
    """K(r,s) = 2 sum_k (-1)^{k-1} d_k K(r+s-k+1) zeta(2k+1), where K(r,s) = 2^{2r+2s+3} T(r,s)."""
    ctx = cache.context
    total = ctx.mp.mpf(0)
    for k in range(1, r + s + 2):
        d = murakami_coeff(k, r, s)
        total += ctx.mpf(2 * (-1) ** (k - 1) * d) * k_all_twos(r + s - k + 1, cache) * zeta_int(2 * k + 1, cache)
    return EvalResult(total, ctx.mp.mpf(0), Route.MURAKAMI, 0)


def h_lyh(r: int, s: int, cache: ConstantCache) -> EvalResult:
    """H(r,s) = -4 pi^{2r+2s+2} / (2r+2)! * A(r,s)."""
    a = a_series(r, s, cache)
    scale = 4 * pi(cache) ** (2 * r + 2 * s + 2) / math.factorial(2 * r + 2)
    return EvalResult(-scale * a.value, scale * a.tail_bound, Route.LYH_SERIES, a.terms_used)


def t_lyh(r: int, s: int, cache: ConstantCache) -> EvalResult:
    """T(r,s) = -2 / (2r+1)! * (pi/2)^{2r+2s+2} * C(r,s)."""
    c = c_series(r, s, cache)
    scale = 2 * (pi(cache) / 2) ** (2 * r + 2 * s + 2) / math.factorial(2 * r + 1)
    return EvalResult(-scale * c.value, scale * c.tail_bound, Route.LYH_SERIES, c.terms_used)
