"""Exact rational combinatorics and the finite binomial identities.

Rationals are :class:`fractions.Fraction`; binomial coefficients are plain
ints. All checkers evaluate both sides exactly and return a bool, raising
``ValueError`` only when the parameters fall outside the identity's range.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), extended by zero for ``k < 0`` or ``k > n``.

    Negative ``n`` therefore always gives 0; this is not the generalized
    binomial coefficient.
    """
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


_bernoulli_table: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2.

    Uses sum_{j=0}^{n} C(n+1, j) B_j = 0, memoized across calls.
    """
    if n < 0:
        raise ValueError("bernoulli index must be nonnegative")
    if n < len(_bernoulli_table):
        return _bernoulli_table[n]
    with _bernoulli_lock:
        table = _bernoulli_table
        for m in range(len(table), n + 1):
            if m > 1 and m % 2 == 1:
                table.append(Fraction(0))
                continue
            acc = Fraction(0)
            for j in range(m):
                bj = table[j]
                if bj:
                    acc += math.comb(m + 1, j) * bj
            table.append(-acc / (m + 1))
    return _bernoulli_table[n]


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [p for p in range(n + 1) if sieve[p]]


def von_staudt_clausen_denominator(n: int) -> int:
    """Product of the primes p with (p - 1) | n, for even n >= 2."""
    if n < 2 or n % 2:
        raise ValueError("von Staudt-Clausen applies to even n >= 2")
    return math.prod(p for p in _primes_upto(n + 1) if n % (p - 1) == 0)


def check_von_staudt_clausen(n: int) -> bool:
    return bernoulli(n).denominator == von_staudt_clausen_denominator(n)


class RationalPolynomial:
    """Dense univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Sequence = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def linear(cls, constant, slope=1) -> "RationalPolynomial":
        return cls([constant, slope])

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else Fraction(0)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return RationalPolynomial([self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __mul__(self, other):
        other = _as_poly(other)
        if not self._coeffs or not other._coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = RationalPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self._coeffs]})"


def _as_poly(x) -> RationalPolynomial:
    return x if isinstance(x, RationalPolynomial) else RationalPolynomial([x])


def _product(polys) -> RationalPolynomial:
    out = RationalPolynomial([1])
    for p in polys:
        out = out * p
    return out


def partial_fraction_sides(j: int, m: int) -> tuple[RationalPolynomial, RationalPolynomial]:
    """Both sides of the partial-fraction expansion of prod_{i=j}^{m} 1/(x+i), times that product's denominator.

    The left side is the constant 1; the right side is
    (1/(m-j)!) * sum_i (-1)^{i-j} C(m-j, i-j) prod_{l != i} (x + l).
    """
    if not (m > j >= 1):
        raise ValueError(f"need m > j >= 1, got j={j}, m={m}")
    factors = {i: RationalPolynomial.linear(i) for i in range(j, m + 1)}
    lhs = RationalPolynomial([1])
    rhs = RationalPolynomial()
    for i in range(j, m + 1):
        others = _product(f for l, f in factors.items() if l != i)
        rhs = rhs + (-1) ** (i - j) * binomial(m - j, i - j) * others
    rhs = rhs * Fraction(1, math.factorial(m - j))
    return lhs, rhs


def check_partial_fraction(j: int, m: int) -> bool:
    lhs, rhs = partial_fraction_sides(j, m)
    return lhs == rhs


def alternating_binomial_prefix(j: int, m: int) -> int:
    """sum_{i=j}^{m-1} (-1)^{i-j} C(m-j, i-j); telescopes to (-1)^{m-j-1}."""
    return sum((-1) ** (i - j) * binomial(m - j, i - j) for i in range(j, m))


def _check_lemma_range(r: int, s: int, k: int) -> None:
    if r < 1 or s < 1 or k < 1:
        raise ValueError(f"r, s, k must be positive, got r={r}, s={s}, k={k}")
    # k <= (r + 1)/2 + s
    if 2 * k > r + 1 + 2 * s:
        raise ValueError(f"k={k} exceeds (r+1)/2 + s for r={r}, s={s}")


def binomial_identity_sum(r: int, s: int, k: int, lower: int = 0) -> int:
    return sum((-1) ** i * binomial(2 * s + 1, i) * binomial(r + i, 2 * k)
               for i in range(max(0, lower), 2 * s + 2))


def binomial_identity_rhs(r: int, s: int, k: int) -> int:
    return -binomial(r, 2 * k - 2 * s - 1)


def check_binomial_identity_full(r: int, s: int, k: int) -> bool:
    """sum_{i=0}^{2s+1} (-1)^i C(2s+1, i) C(r+i, 2k) == -C(r, 2k-2s-1)."""
    _check_lemma_range(r, s, k)
    return binomial_identity_sum(r, s, k) == binomial_identity_rhs(r, s, k)


def check_binomial_identity_tail(r: int, s: int, k: int) -> bool:
    """Same identity with the sum starting at i = 2k - r (clamped at 0)."""
    _check_lemma_range(r, s, k)
    return binomial_identity_sum(r, s, k, lower=2 * k - r) == binomial_identity_rhs(r, s, k)


def generating_polynomial(r: int, s: int) -> RationalPolynomial:
    """F(x) = sum_{i=0}^{2s+1} (-1)^i C(2s+1, i) (1+x)^{r+i}, expanded term by term."""
    one_plus_x = RationalPolynomial([1, 1])
    power = one_plus_x ** r
    out = RationalPolynomial()
    for i in range(2 * s + 2):
        out = out + (-1) ** i * binomial(2 * s + 1, i) * power
        power = power * one_plus_x
    return out


def generating_polynomial_factored(r: int, s: int) -> RationalPolynomial:
    """The same F(x) in its factored form -(1+x)^r x^{2s+1}."""
    x_power = RationalPolynomial([0] * (2 * s + 1) + [1])
    return -(RationalPolynomial([1, 1]) ** r) * x_power


def check_delta_filter(values: Sequence, a: int) -> bool:
    """sum_k values[k] * delta(a, k) == values[a]."""
    if not 0 <= a < len(values):
        raise IndexError(f"index {a} outside a list of length {len(values)}")
    total = sum((v * (1 if k == a else 0) for k, v in enumerate(values)), Fraction(0))
    return total == values[a]


def shifted_binomial_sum(r: int, s: int, k: int, variant: str, shift: int,
                         complement: bool = True) -> int:
    """sum_{i'} (-1)^{i'} C(2s+1, i') C(2r+i'+shift, 2k) over the full or tail range.

    With ``complement`` the inner binomial is written C(n, n - 2k), as in the
    proofs; otherwise as C(n, 2k).
    """
    n0 = 2 * r + shift
    lower = 0 if variant == "full" else max(0, 2 * k - n0)
    total = 0
    for i in range(lower, 2 * s + 2):
        n = n0 + i
        inner = binomial(n, n - 2 * k) if complement else binomial(n, 2 * k)
        total += (-1) ** i * binomial(2 * s + 1, i) * inner
    return total


def check_shifted_binomial_sum(r: int, s: int, k: int, variant: str, shift: int) -> bool:
    """The instances of the binomial identity used with upper argument 2r + shift."""
    if variant not in ("full", "tail"):
        raise ValueError(f"variant must be 'full' or 'tail', got {variant!r}")
    if shift not in (1, 2):
        raise ValueError(f"shift must be 1 or 2, got {shift!r}")
    if r < 0 or s < 0 or not 1 <= k <= r + s + 1:
        raise ValueError(f"need r, s >= 0 and 1 <= k <= r+s+1, got r={r}, s={s}, k={k}")
    rhs = -binomial(2 * r + shift, 2 * k - 2 * s - 1)
    return (shifted_binomial_sum(r, s, k, variant, shift, complement=True) == rhs
            and shifted_binomial_sum(r, s, k, variant, shift, complement=False) == rhs)
