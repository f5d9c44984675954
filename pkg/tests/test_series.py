import math
from fractions import Fraction

import mpmath
import pytest

from hoffmanzeta import constants as C
from hoffmanzeta import series as S
from hoffmanzeta.numerics import agree_digits


def mpmath_series(shifts, dps=60):
    """The same series summed by mpmath's own zeta and nsum."""
    with mpmath.workdps(dps):
        return mpmath.nsum(lambda n: mpmath.zeta(2 * n) / (4 ** n * math.prod(2 * n + a for a in shifts)),
                           [0, mpmath.inf])


def test_kronecker_delta():
    assert S.kronecker_delta(2, 2) == 1
    assert S.kronecker_delta(1, 2) == 0
    # the odd-p filter compares an integer with a half-integer
    assert S.kronecker_delta(1, 1.5) == 0


def test_first_terms(ctx, cache):
    terms = S.series_terms((1,), cache)
    assert next(terms) == -0.5
    assert agree_digits(next(terms), C.zeta_int(2, cache) / 12, ctx) == 50


@pytest.mark.parametrize("p", range(1, 13))
def test_lupu_dual_route(ctx, cache, p):
    direct = S.lupu_series_direct(p, cache)
    closed = S.lupu_closed_form(p, cache)
    assert abs(direct.value - closed.value) < mpmath.mpf(10) ** -40
    assert abs(direct.value - closed.value) <= direct.tail_bound + ctx.epsilon
    assert direct.terms_used > 0 and closed.terms_used == 0


def test_lupu_p1(ctx, cache):
    closed = S.lupu_closed_form(1, cache).value
    assert closed == -C.log2(cache) / 2
    assert agree_digits(closed, "-0.34657359027997265470861606072908828", 35) == 35
    assert agree_digits(S.lupu_series_direct(1, cache).value, closed, 45) == 45


def test_lupu_p2_by_hand(ctx, cache):
    z3, pi = C.zeta_int(3, cache), C.pi(cache)
    hand = -C.log2(cache) / 2 + 3 * z3 / (4 * pi ** 2) + z3 / pi ** 2
    assert agree_digits(S.lupu_closed_form(2, cache).value, hand, ctx) == 50


def test_against_mpmath_summation(cache):
    for shifts in ((3,), (2, 3, 4), (1, 2)):
        ours = S.rational_zeta_series(shifts, cache).value
        assert agree_digits(ours, mpmath_series(shifts), 45) == 45


def test_lupu_rejects(cache):
    with pytest.raises(ValueError):
        S.lupu_series_direct(0, cache)
    with pytest.raises(ValueError):
        S.lupu_closed_form(0, cache)
    with pytest.raises(ValueError):
        S.rational_zeta_series((0, 1), cache)


@pytest.mark.parametrize("shifts", [(1,), (5,), (2, 3), (3, 4, 5, 6)])
def test_cauchy_property(cache, shifts):
    sums = S.partial_sums(shifts, cache, 40)
    for n in (1, 5, 20, 34):
        bound = S._tail_bound(cache.context.mp, shifts, n)
        assert abs(sums[n + 4] - sums[n - 1]) <= bound


@pytest.mark.parametrize("shifts", [(1,), (2, 3, 4, 5)])
def test_partial_sums_monotone_after_first(cache, shifts):
    sums = S.partial_sums(shifts, cache, 30)
    assert sums[0] < 0
    assert all(a < b for a, b in zip(sums, sums[1:]))


def test_a_and_c_base_values(ctx, cache):
    z3, pi = C.zeta_int(3, cache), C.pi(cache)
    a = S.a_series(0, 0, cache)
    c = S.c_series(0, 0, cache)
    assert abs(a.value + z3 / (2 * pi ** 2)) <= a.tail_bound + ctx.epsilon
    assert abs(c.value + 7 * z3 / (4 * pi ** 2)) <= c.tail_bound + ctx.epsilon


def test_rs_rejects(cache):
    for fn in (S.a_series, S.c_series, S.b_sum_definition, S.d_sum_closed):
        with pytest.raises(ValueError):
            fn(-1, 0, cache)


@pytest.mark.parametrize("r", range(5))
@pytest.mark.parametrize("s", range(5))
def test_intermediate_sums(ctx, cache, r, s):
    scale = math.factorial(2 * s + 1)
    b_def, b_closed = S.b_sum_definition(r, s, cache), S.b_sum_closed(r, s, cache)
    d_def, d_closed = S.d_sum_definition(r, s, cache), S.d_sum_closed(r, s, cache)
    assert abs(b_def.value - b_closed.value) <= b_def.tail_bound + ctx.epsilon
    assert abs(d_def.value - d_closed.value) <= d_def.tail_bound + ctx.epsilon
    a, c = S.a_series(r, s, cache), S.c_series(r, s, cache)
    assert abs(scale * a.value - b_def.value) <= scale * a.tail_bound + b_def.tail_bound + ctx.epsilon
    assert abs(scale * c.value - d_def.value) <= scale * c.tail_bound + d_def.tail_bound + ctx.epsilon


def test_closed_coefficients_by_hand():
    # k = 1, r = s = 0: -3/2 + 1 and -3/4 - 1
    assert S.b_closed_coefficient(1, 0, 0) == Fraction(-1, 2)
    assert S.d_closed_coefficient(1, 0, 0) == Fraction(-7, 4)
    # every binomial is zero-extended to 0 past the top row
    assert S.b_closed_coefficient(3, 0, 0) == 0
    assert S.d_closed_coefficient(3, 0, 0) == 0
