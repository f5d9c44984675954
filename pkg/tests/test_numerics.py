import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hoffmanzeta.numerics import (ConfigurationError, EvalResult, Route, agree_digits,
                                  make_context, to_fraction)


@pytest.mark.parametrize("target,guard,min_bits", [(50, 10, 200), (10, 5, 50)])
def test_make_context_bits(target, guard, min_bits):
    ctx = make_context(target, guard)
    assert ctx.working_bits >= min_bits
    assert ctx.working_bits >= math.ceil((target + guard) * 3.33)
    assert ctx.working_bits >= math.ceil((target + guard) * math.log2(10))
    assert ctx.mp.prec == ctx.working_bits


@pytest.mark.parametrize("target,guard", [(9, 5), (10, 4), (0, 10), (50, 0)])
def test_make_context_rejects(target, guard):
    with pytest.raises(ConfigurationError):
        make_context(target, guard)


def test_context_is_deterministic_and_isolated():
    a, b = make_context(30, 5), make_context(80, 5)
    assert make_context(30, 5) == a
    assert a.mp is not b.mp
    assert a.mp.prec != b.mp.prec


def test_agree_digits_examples():
    assert agree_digits("1.0000", "1.0000", 50) == 50
    assert agree_digits("1.0", "1.001", 50) == 3
    # inclusive boundary: |0.6 - 0.5| = 10^-1 * 1
    assert agree_digits("0.5", "0.6", 50) == 1
    assert agree_digits("0.5", "0.7", 50) == 0


def test_agree_digits_cap_from_context(ctx):
    x = ctx.mp.pi
    assert agree_digits(x, x, ctx) == ctx.target_digits
    # scale is max(1, |x|) = pi, so 1e-30 agrees to 30 digits
    assert agree_digits(x, x + ctx.mpf("1e-30"), ctx) == 30
    assert agree_digits(x, x + ctx.mpf("4e-30"), ctx) == 29


def test_to_fraction_is_exact(ctx):
    assert to_fraction(ctx.mpf(0.75)) == Fraction(3, 4)
    assert to_fraction(ctx.mpf(-3)) == -3
    assert to_fraction("0.1") == Fraction(1, 10)


decimals = st.decimals(min_value=-1000, max_value=1000, allow_nan=False, allow_infinity=False, places=6)


@given(decimals, decimals)
def test_agree_digits_symmetric(a, b):
    assert agree_digits(str(a), str(b), 40) == agree_digits(str(b), str(a), 40)


@given(decimals)
def test_agree_digits_reflexive(a):
    assert agree_digits(str(a), str(a), 40) == 40


def test_eval_result_invariants(ctx):
    zero = ctx.mpf(0)
    EvalResult(ctx.mpf(1), zero, Route.CONSTANT, 0)
    with pytest.raises(ValueError):
        EvalResult(ctx.mpf(1), ctx.mpf(-1), Route.DIRECT, 3)
    with pytest.raises(ValueError):
        EvalResult(ctx.mpf(1), ctx.mpf(1), Route.DIRECT, 0)
    res = EvalResult(ctx.mpf(1), ctx.mpf("0.5"), Route.DIRECT, 10)
    assert res.upper == ctx.mpf("1.5")
