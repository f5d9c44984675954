"""How the nested-sum oracle tightens as the cutoff grows.

The oracle returns a lower bound V and a tail bound, so the true value
lies in [V, V + tail]. Watch the interval close in on the finite formula
for H(1,0) = zeta(2,3).
"""
import time

from hoffmanzeta import ConstantCache, h_zagier, hoffman_index, make_context, mzv_direct

ctx = make_context(30)
cache = ConstantCache(ctx)
exact = h_zagier(1, 0, cache).value
index = hoffman_index(1, 0)
print("index", index, " finite formula", ctx.to_str(exact, 25))

for n in (10, 100, 1000, 10 ** 4, 10 ** 5):
    t0 = time.perf_counter()
    res = mzv_direct(index, n, ctx, cache)
    dt = time.perf_counter() - t0
    inside = res.lower <= exact <= res.upper
    print(f"N={n:>6}  V={ctx.to_str(res.value, 12)}  tail={ctx.to_str(res.tail_bound, 3)}"
          f"  gap={ctx.to_str(exact - res.value, 3)}  contained={inside}  {dt:.2f}s")
