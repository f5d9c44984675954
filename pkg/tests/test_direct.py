import itertools
from fractions import Fraction

import mpmath
import pytest

from hoffmanzeta import constants as C
from hoffmanzeta.direct import Index, hoffman_index, mzv_direct, tvalue_direct
from hoffmanzeta.numerics import make_context


def brute_force(entries, n, odd=False):
    """Exact truncated sum by enumerating all increasing tuples."""
    total = Fraction(0)
    for ks in itertools.combinations(range(1, n + 1), len(entries)):
        term = Fraction(1)
        for k, s in zip(ks, entries):
            term /= (2 * k - 1 if odd else k) ** s
        total += term
    return total


@pytest.mark.parametrize("r,s,kind,entries", [(0, 0, "zeta", (3,)), (1, 0, "zeta", (2, 3)),
                                              (1, 2, "t", (2, 3, 2, 2))])
def test_hoffman_index(r, s, kind, entries):
    idx = hoffman_index(r, s, kind)
    assert idx.entries == entries and idx.kind == kind
    assert idx.depth == r + s + 1 and idx.weight == 2 * r + 2 * s + 3


def test_index_validation():
    with pytest.raises(ValueError):
        Index((1, 2))
    with pytest.raises(ValueError):
        Index(())
    with pytest.raises(ValueError):
        Index((2,), "eta")


@pytest.mark.parametrize("entries", [(2,), (2, 3), (3, 2), (2, 2, 3), (3, 2, 2)])
@pytest.mark.parametrize("n", [3, 7, 12])
def test_matches_enumeration(ctx, entries, n):
    for kind, fn, odd in (("zeta", mzv_direct, False), ("t", tvalue_direct, True)):
        if n < len(entries):
            continue
        got = fn(Index(entries, kind), n, ctx).value
        exact = brute_force(entries, n, odd)
        target = ctx.mpf(exact)
        assert got <= target
        assert target - got < ctx.epsilon


def test_cutoff_below_depth(ctx):
    with pytest.raises(ValueError):
        mzv_direct(Index((2, 2, 3)), 2, ctx)
    with pytest.raises(ValueError):
        mzv_direct(Index((2,), "t"), 10, ctx)


def test_zeta2_tail(ctx, cache):
    res = mzv_direct(Index((2,)), 10 ** 6, ctx, cache)
    assert res.tail_bound <= mpmath.mpf("1.0000001e-6")
    pi2 = C.zeta_int(2, cache)
    assert res.value <= pi2 <= res.upper


def test_zeta23_enclosure(ctx, cache):
    n = 10 ** 5
    res = mzv_direct(Index((2, 3)), n, ctx, cache)
    closed = 3 * C.zeta_int(2, cache) * C.zeta_int(3, cache) - C.zeta_int(5, cache) * 11 / 2
    assert res.tail_bound <= C.zeta_int(2, cache) / (2 * ctx.mpf(n) ** 2)
    assert res.value <= closed <= res.upper
    assert mpmath.nstr(res.value, 7) == "0.2288104"


def test_zeta22_enclosure(ctx, cache):
    res = mzv_direct(Index((2, 2)), 10 ** 5, ctx, cache)
    assert res.value <= C.pi(cache) ** 4 / 120 <= res.upper


def test_tvalues(ctx, cache):
    t2 = tvalue_direct(Index((2,), "t"), 10 ** 6, ctx, cache)
    assert t2.value <= C.pi(cache) ** 2 / 8 <= t2.upper
    t3 = tvalue_direct(Index((3,), "t"), 10 ** 4, ctx, cache)
    assert t3.value <= C.zeta_int(3, cache) * 7 / 8 <= t3.upper
    assert ctx.to_str(C.zeta_int(3, cache) * 7 / 8, 17) == "1.0517997902646450"
    t22 = tvalue_direct(Index((2, 2), "t"), 10 ** 5, ctx, cache)
    assert t22.value <= C.pi(cache) ** 4 / 384 <= t22.upper


def test_monotone_truncation(ctx):
    idx = Index((2, 3, 2))
    results = [mzv_direct(idx, n, ctx) for n in (5, 10, 50, 200, 1000)]
    values = [r.value for r in results]
    bounds = [r.tail_bound for r in results]
    assert values == sorted(values)
    assert bounds == sorted(bounds, reverse=True)


def test_stuffle(ctx, cache):
    n = 10 ** 5
    z23 = mzv_direct(Index((2, 3)), n, ctx, cache)
    z32 = mzv_direct(Index((3, 2)), n, ctx, cache)
    z5 = mzv_direct(Index((5,)), n, ctx, cache)
    lhs = C.zeta_int(2, cache) * C.zeta_int(3, cache)
    rhs = z23.value + z32.value + z5.value
    budget = z23.tail_bound + z32.tail_bound + z5.tail_bound + ctx.epsilon
    assert abs(lhs - rhs) <= budget


def test_context_independent_cache():
    lo, hi = make_context(20, 5), make_context(40, 5)
    a = mzv_direct(Index((2, 3)), 1000, lo)
    b = mzv_direct(Index((2, 3)), 1000, hi)
    assert abs(a.value - b.value) < mpmath.mpf(10) ** -20
