"""Precision contexts, evaluation results and digit agreement.

Every real number in the package is an mpmath ``mpf`` owned by the private
``MPContext`` of a :class:`PrecisionContext`, so two contexts never share
mutable global precision state.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath.ctx_mp import MPContext

MIN_TARGET_DIGITS = 10
MIN_GUARD_DIGITS = 5

# ceil((t + g) * 3.33) also covers ceil((t + g) * log2(10)), since 3.33 > log2(10).
_BITS_PER_DIGIT_NUM = 333
_BITS_PER_DIGIT_DEN = 100


class ConfigurationError(ValueError):
    """Raised for illegal precision settings or unknown options."""


class Route(str, enum.Enum):
    DIRECT = "direct"
    LYH_SERIES = "lyh-series"
    ZAGIER = "zagier"
    MURAKAMI = "murakami"
    LUPU_DIRECT = "lupu-direct"
    LUPU_CLOSED = "lupu-closed"
    B_DEF = "b-def"
    B_CLOSED = "b-closed"
    D_DEF = "d-def"
    D_CLOSED = "d-closed"
    CONSTANT = "constant"

    def __str__(self) -> str:
        return self.value


@functools.lru_cache(maxsize=None)
def _mp_for_bits(bits: int) -> MPContext:
    mp = MPContext()
    mp.prec = bits
    return mp


@dataclass(frozen=True)
class PrecisionContext:
    target_digits: int
    guard_digits: int
    working_bits: int

    @property
    def mp(self) -> MPContext:
        """The mpmath context running at ``working_bits``."""
        return _mp_for_bits(self.working_bits)

    @property
    def epsilon(self):
        """The comparison allowance ``10**-target_digits``."""
        return self.mp.mpf(10) ** (-self.target_digits)

    def mpf(self, x):
        if isinstance(x, Fraction):
            return self.mp.mpf(x.numerator) / x.denominator
        return self.mp.mpf(x)

    def to_str(self, x, digits: int | None = None) -> str:
        """Decimal string with ``digits`` (default ``target_digits``) significant digits."""
        n = self.target_digits if digits is None else digits
        return self.mp.nstr(self.mpf(x), n, strip_zeros=False, min_fixed=-5, max_fixed=5)


def make_context(target_digits: int = 50, guard_digits: int = 10) -> PrecisionContext:
    if not isinstance(target_digits, int) or target_digits < MIN_TARGET_DIGITS:
        raise ConfigurationError(
            f"target_digits must be an integer >= {MIN_TARGET_DIGITS}, got {target_digits!r}")
    if not isinstance(guard_digits, int) or guard_digits < MIN_GUARD_DIGITS:
        raise ConfigurationError(
            f"guard_digits must be an integer >= {MIN_GUARD_DIGITS}, got {guard_digits!r}")
    total = target_digits + guard_digits
    bits = -(-total * _BITS_PER_DIGIT_NUM // _BITS_PER_DIGIT_DEN)
    return PrecisionContext(target_digits, guard_digits, bits)


@dataclass(frozen=True)
class EvalResult:
    """A value with a rigorous bound on its truncation error.

    ``tail_bound`` ignores rounding, which the guard digits absorb.
    """

    value: object
    tail_bound: object
    route: Route
    terms_used: int = 0

    def __post_init__(self):
        if self.tail_bound < 0:
            raise ValueError("tail_bound must be nonnegative")
        if self.terms_used < 0:
            raise ValueError("terms_used must be nonnegative")
        if self.terms_used == 0 and self.tail_bound != 0:
            raise ValueError("a result without summed terms must have zero tail bound")

    @property
    def lower(self):
        return self.value

    @property
    def upper(self):
        return self.value + self.tail_bound


Real = Union[int, str, Fraction, object]


def to_fraction(x: Real) -> Fraction:
    """Exact rational value of an int, decimal string, Fraction or mpf."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raw = getattr(x, "_mpf_", None)
    if raw is None:
        return Fraction(x)
    sign, man, exp, _ = raw
    if not man and exp:
        raise ValueError(f"cannot convert {x} to a fraction")
    man = -int(man) if sign else int(man)
    return Fraction(man) * 2 ** exp if exp >= 0 else Fraction(man, 2 ** -exp)


def agree_digits(a: Real, b: Real, cap: Union[int, PrecisionContext]) -> int:
    """Largest ``n`` with ``|a - b| <= 10**-n * max(1, |a|, |b|)``, at most ``cap``.

    The comparison is done exactly on the rational values of the operands and
    the boundary is inclusive, so ``agree_digits(0.5, 0.6) == 1``.
    """
    if isinstance(cap, PrecisionContext):
        cap = cap.target_digits
    fa, fb = to_fraction(a), to_fraction(b)
    diff = abs(fa - fb)
    if diff == 0:
        return cap
    scale = max(Fraction(1), abs(fa), abs(fb))
    n = 0
    while n < cap and diff * 10 ** (n + 1) <= scale:
        n += 1
    return n
