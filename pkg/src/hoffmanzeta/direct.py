"""Truncated nested sums for multiple zeta values and multiple t-values.

This is the formula-free oracle. Sums run in fixed-point integer arithmetic
with every quotient rounded down, so the reported value never exceeds the
true truncated sum and ``[value, value + tail_bound]`` encloses the limit.
"""
from __future__ import annotations

from dataclasses import dataclass

from .constants import ConstantCache, zeta_int
from .numerics import EvalResult, PrecisionContext, Route

KINDS = ("zeta", "t")


@dataclass(frozen=True)
class Index:
    entries: tuple
    kind: str = "zeta"

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if not self.entries:
            raise ValueError("index must have at least one entry")
        if any(e < 2 for e in self.entries):
            raise ValueError(f"entries must all be >= 2, got {self.entries}")

    @property
    def depth(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def __str__(self):
        name = "zeta" if self.kind == "zeta" else "t"
        return f"{name}({','.join(map(str, self.entries))})"


def hoffman_index(r: int, s: int, kind: str = "zeta") -> Index:
    """The index ({2}^r, 3, {2}^s)."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    return Index((2,) * r + (3,) + (2,) * s, kind)


def _nested_sum(entries, cutoff: int, odd: bool, frac_bits: int) -> int:
    """floor-rounded 2^frac_bits * sum over 1 <= k_1 < ... < k_l <= cutoff."""
    one = 1 << frac_bits
    dens = [2 * k - 1 if odd else k for k in range(cutoff + 1)]
    prev = None
    for level, s in enumerate(entries):
        cur = [0] * (cutoff + 1)
        acc = 0
        for k in range(level + 1, cutoff + 1):
            num = one if prev is None else prev[k - 1]
            acc += num // dens[k] ** s
            cur[k] = acc
        prev = cur
    return prev[cutoff]


def _direct(index: Index, cutoff: int, context: PrecisionContext,
            cache: ConstantCache | None, odd: bool) -> EvalResult:
    if cutoff < index.depth:
        raise ValueError(f"cutoff {cutoff} is below the depth {index.depth}")
    cache = cache if cache is not None and cache.context == context else ConstantCache(context)
    frac_bits = context.working_bits + 32
    total = _nested_sum(index.entries, cutoff, odd, frac_bits)
    mp = context.mp
    value = mp.ldexp(mp.mpf(total), -frac_bits)
    last = index.entries[-1]
    inner = zeta_int(2, cache) ** (index.depth - 1)
    if odd:
        outer = mp.mpf(2 * cutoff - 1) ** (1 - last) / (2 * (last - 1))
    else:
        outer = mp.mpf(cutoff) ** (1 - last) / (last - 1)
    return EvalResult(value, inner * outer, Route.DIRECT, cutoff)


def mzv_direct(index: Index, cutoff: int, context: PrecisionContext,
               cache: ConstantCache | None = None) -> EvalResult:
    """Truncated multiple zeta value with k_l <= cutoff.

    tail_bound = zeta(2)^{depth-1} * cutoff^{1-s_l} / (s_l - 1).
    """
    if index.kind != "zeta":
        raise ValueError("mzv_direct needs a zeta index")
    return _direct(index, cutoff, context, cache, odd=False)


def tvalue_direct(index: Index, cutoff: int, context: PrecisionContext,
                  cache: ConstantCache | None = None) -> EvalResult:
    """Truncated multiple t-value with k_l <= cutoff.

    tail_bound = zeta(2)^{depth-1} * (2 cutoff - 1)^{1-s_l} / (2 (s_l - 1)).
    """
    if index.kind != "t":
        raise ValueError("tvalue_direct needs a t index")
    return _direct(index, cutoff, context, cache, odd=True)
