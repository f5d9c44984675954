"""High-precision constants: pi, log 2, integer zeta values and the all-twos closed forms.

pi and log 2 are exact rational partial sums (binary splitting) of arctan and
log series, rounded once to the working precision. Even zeta values use the
Bernoulli closed form; odd ones use Euler-Maclaurin summation.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction

from .exact import bernoulli
from .numerics import EvalResult, PrecisionContext, Route

#: zeta(0), the analytic-continuation value; the zeta(2n) series below start at n = 0.
ZETA_ZERO = Fraction(-1, 2)


def binary_split(p, q, a, b, n1: int, n2: int) -> tuple[int, int, int, int]:
    """Binary splitting for sum_{k=n1}^{n2-1} a(k)/b(k) * prod_{j=n1}^{k} p(j)/q(j).

    Returns integers (P, Q, B, T) with the partial sum equal to T / (B * Q).
    """
    if n2 - n1 == 1:
        pk, qk = p(n1), q(n1)
        return pk, qk, b(n1), a(n1) * pk
    mid = (n1 + n2) // 2
    p1, q1, b1, t1 = binary_split(p, q, a, b, n1, mid)
    p2, q2, b2, t2 = binary_split(p, q, a, b, mid, n2)
    return p1 * p2, q1 * q2, b1 * b2, b2 * q2 * t1 + b1 * p1 * t2


def _terms_for(x: int, bits: int) -> int:
    # smallest N with x^(2N+1) >= 2^bits
    return max(1, math.ceil((bits / math.log2(x) - 1) / 2) + 1)


def arctan_inverse(x: int, terms: int, hyperbolic: bool = False) -> tuple[Fraction, Fraction]:
    """Partial sum of arctan(1/x) (or artanh(1/x)) over ``terms`` terms, with a tail bound.

    The bound is x^{-(2N+1)} / ((2N+1)(1 - x^{-2})), valid for both series.
    """
    sign = 1 if hyperbolic else -1
    P, Q, B, T = binary_split(
        lambda k: 1 if k == 0 else sign,
        lambda k: x if k == 0 else x * x,
        lambda k: 1,
        lambda k: 2 * k + 1,
        0, terms)
    tail = Fraction(x * x, (2 * terms + 1) * x ** (2 * terms + 1) * (x * x - 1))
    return Fraction(T, B * Q), tail


# Machin-type decompositions: pi = sum coeff * arctan(1/x).
MACHIN = ((16, 5), (-4, 239))
GAUSS = ((48, 18), (32, 57), (-20, 239))


def pi_rational(bits: int, formula=MACHIN) -> tuple[Fraction, Fraction]:
    """Rational approximation of pi with absolute error below the returned bound."""
    value, tail = Fraction(0), Fraction(0)
    for coeff, x in formula:
        s, t = arctan_inverse(x, _terms_for(x, bits + 8))
        value += coeff * s
        tail += abs(coeff) * t
    return value, tail


def log2_rational(bits: int) -> tuple[Fraction, Fraction]:
    """sum_{k=1}^{N} 1/(k 2^k) with the tail bound 1/((N+1) 2^N)."""
    n = bits + 8
    P, Q, B, T = binary_split(lambda k: 1, lambda k: 2, lambda k: 1, lambda k: k + 1, 0, n)
    return Fraction(T, B * Q), Fraction(1, (n + 1) * 2 ** n)


def log2_rational_atanh(bits: int) -> tuple[Fraction, Fraction]:
    """log 2 = 2 artanh(1/3)."""
    s, t = arctan_inverse(3, _terms_for(3, bits + 8), hyperbolic=True)
    return 2 * s, 2 * t


def zeta_euler_maclaurin(s: int, context: PrecisionContext, base_terms: int | None = None) -> EvalResult:
    """zeta(s) for integer s >= 2 by Euler-Maclaurin summation.

    The remainder after M correction terms is bounded by the first omitted
    correction term, which is reported as the tail bound.
    """
    if s < 2:
        raise ValueError("Euler-Maclaurin evaluation needs s >= 2")
    mp = context.mp
    bits = context.working_bits
    n = base_terms if base_terms is not None else bits // 8 + 10
    tol = mp.mpf(2) ** (-(bits + 8))
    while True:
        N = mp.mpf(n)
        head = mp.fsum(mp.mpf(k) ** (-s) for k in range(1, n))
        head += N ** (1 - s) / (s - 1) + N ** (-s) / 2
        rising = mp.mpf(s)          # s (s+1) ... (s+2j-2)
        npow = N ** (-s - 1)        # N^{-s-2j+1}
        corr = mp.mpf(0)
        for j in range(1, 2 * n + 1):
            term = context.mpf(bernoulli(2 * j)) / math.factorial(2 * j) * rising * npow
            if abs(term) < tol:
                return EvalResult(head + corr, abs(term), Route.CONSTANT, n - 1 + j - 1)
            corr += term
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            npow /= N * N
        n *= 2


class ConstantCache:
    """Append-only memo of constants computed at one precision context."""

    def __init__(self, context: PrecisionContext):
        self.context = context
        self._memo: dict = {}
        self._lock = threading.Lock()

    def get(self, key, factory):
        try:
            return self._memo[key]
        except KeyError:
            pass
        value = factory()
        with self._lock:
            return self._memo.setdefault(key, value)

    def __contains__(self, key) -> bool:
        return key in self._memo

    def __len__(self) -> int:
        return len(self._memo)

    def warm(self, max_odd_zeta: int = 0, max_even_zeta: int = 0) -> "ConstantCache":
        """Populate pi, log 2 and the zeta values a batch run needs."""
        pi(self)
        log2(self)
        for m in range(3, max_odd_zeta + 1, 2):
            zeta_int(m, self)
        for m in range(0, max_even_zeta + 1, 2):
            zeta_int(m, self)
        return self


def _rational_to_mpf(context: PrecisionContext, x: Fraction):
    return context.mpf(x)


def pi(cache: ConstantCache):
    ctx = cache.context
    return cache.get("pi", lambda: _rational_to_mpf(ctx, pi_rational(ctx.working_bits)[0]))


def log2(cache: ConstantCache):
    ctx = cache.context
    return cache.get("log2", lambda: _rational_to_mpf(ctx, log2_rational(ctx.working_bits)[0]))


def zeta_even_bernoulli(n: int, cache: ConstantCache):
    """zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!) for n >= 1."""
    ctx = cache.context
    b = bernoulli(2 * n)
    coeff = Fraction((-1) ** (n + 1) * b.numerator * 2 ** (2 * n - 1),
                     b.denominator * math.factorial(2 * n))
    return ctx.mpf(coeff) * pi(cache) ** (2 * n)


def zeta_int(m: int, cache: ConstantCache):
    """Riemann zeta at an integer m = 0 or m >= 2."""
    if m == 1 or m < 0:
        raise ValueError(f"zeta_int is defined here for m = 0 or m >= 2, got {m}")

    def compute():
        ctx = cache.context
        if m == 0:
            return ctx.mpf(ZETA_ZERO)
        if m % 2 == 0:
            return zeta_even_bernoulli(m // 2, cache)
        return zeta_euler_maclaurin(m, ctx).value

    return cache.get(("zeta", m), compute)


def zeta_all_twos(d: int, cache: ConstantCache):
    """zeta({2}^d) = pi^{2d} / (2d+1)!; the empty index gives 1."""
    if d < 0:
        raise ValueError("depth must be nonnegative")
    return cache.get(("zeta2s", d),
                     lambda: pi(cache) ** (2 * d) / math.factorial(2 * d + 1))


def t_all_twos(d: int, cache: ConstantCache):
    """t({2}^d) = pi^{2d} / (2^{2d} (2d)!); the empty index gives 1."""
    if d < 0:
        raise ValueError("depth must be nonnegative")
    return cache.get(("t2s", d),
                     lambda: pi(cache) ** (2 * d) / (4 ** d * math.factorial(2 * d)))
