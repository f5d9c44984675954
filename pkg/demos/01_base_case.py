"""The smallest Hoffman values, H(0,0) and T(0,0), three ways each.

At r = s = 0 the finite formulas collapse to zeta(3) and (7/8) zeta(3).
We print the closed form, the rescaled rational zeta series and the
truncated nested sum with its error bar.

    python demos/01_base_case.py
"""
from hoffmanzeta import (ConstantCache, h_lyh, h_zagier, hoffman_index, make_context,
                         mzv_direct, t_lyh, t_murakami, tvalue_direct, zeta_int)

ctx = make_context(50)
cache = ConstantCache(ctx)

z3 = zeta_int(3, cache)
print("zeta(3)        ", ctx.to_str(z3))
print("H(0,0) finite  ", ctx.to_str(h_zagier(0, 0, cache).value))

series = h_lyh(0, 0, cache)
print("H(0,0) series  ", ctx.to_str(series.value), f"after {series.terms_used} terms")

oracle = mzv_direct(hoffman_index(0, 0), 10 ** 4, ctx, cache)
print("H(0,0) in      ", f"[{ctx.to_str(oracle.lower, 15)}, {ctx.to_str(oracle.upper, 15)}]")

print()
print("7/8 zeta(3)    ", ctx.to_str(z3 * 7 / 8))
print("T(0,0) finite  ", ctx.to_str(t_murakami(0, 0, cache).value))
print("T(0,0) series  ", ctx.to_str(t_lyh(0, 0, cache).value))
oracle = tvalue_direct(hoffman_index(0, 0, "t"), 10 ** 4, ctx, cache)
print("T(0,0) in      ", f"[{ctx.to_str(oracle.lower, 15)}, {ctx.to_str(oracle.upper, 15)}]")
