"""Finite formulas against rational zeta series on a small grid.

For every (r, s) the finite formula has no truncation error, while the
series route carries a tail bound. The printed gap should sit far below
the bound plus one unit in the 50th digit.
"""
from hoffmanzeta import ConstantCache, h_lyh, h_zagier, make_context, t_lyh, t_murakami

ctx = make_context(50)
cache = ConstantCache(ctx)

print(f"{'r':>2} {'s':>2}  {'H(r,s)':<24} {'|H gap|':>10}  {'T(r,s)':<24} {'|T gap|':>10}")
for r in range(4):
    for s in range(4):
        h, hs = h_zagier(r, s, cache), h_lyh(r, s, cache)
        t, ts = t_murakami(r, s, cache), t_lyh(r, s, cache)
        print(f"{r:>2} {s:>2}  {ctx.to_str(h.value, 20):<24} {ctx.to_str(abs(h.value - hs.value), 2):>10}"
              f"  {ctx.to_str(t.value, 20):<24} {ctx.to_str(abs(t.value - ts.value), 2):>10}")
