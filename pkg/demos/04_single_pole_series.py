"""The single-pole rational zeta series, summed and in closed form.

L(p) = sum_{n>=0} zeta(2n) / ((2n + p) 4^n) closes in log 2 and odd zeta
values. Partial sums converge like 4^-n, so about 85 terms give 50 digits.
"""
from hoffmanzeta import ConstantCache, log2, make_context
from hoffmanzeta.series import lupu_closed_form, lupu_series_direct, partial_sums

ctx = make_context(50)
cache = ConstantCache(ctx)

print("L(1) = -log(2)/2 =", ctx.to_str(-log2(cache) / 2))
for n, v in enumerate(partial_sums((1,), cache, 8)):
    print(f"  partial sum through n={n}: {ctx.to_str(v, 20)}")

print()
for p in range(1, 9):
    summed = lupu_series_direct(p, cache)
    closed = lupu_closed_form(p, cache)
    print(f"p={p:>2}  {ctx.to_str(closed.value, 25)}  |summed - closed| = "
          f"{ctx.to_str(abs(summed.value - closed.value), 2)}  ({summed.terms_used} terms)")
