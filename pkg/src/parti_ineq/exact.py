"""Exact rational intervals and certified enclosures of pi, sqrt, exp.

Everything here is built on ``fractions.Fraction``; an interval is a pair of
rationals known to bracket the target value.  Addition, multiplication and
subtraction of intervals are exact (no rounding step is ever needed), so
containment soundness reduces to the usual endpoint bookkeeping.  The only
transcendental inputs are pi (from a stored decimal expansion) and exp
(Taylor partial sums with an explicit tail bound).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

__all__ = [
    "RatInterval",
    "PI_DIGITS",
    "MAX_PI_DIGITS",
    "pi_interval",
    "sqrt_interval",
    "nth_root_interval",
    "exp_interval",
    "exp_point_interval",
]


@dataclass(frozen=True)
class RatInterval:
    """Closed interval [lo, hi] with rational endpoints, lo <= hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted interval: {self.lo} > {self.hi}")

    @staticmethod
    def point(value) -> "RatInterval":
        v = Fraction(value)
        return RatInterval(v, v)

    def __add__(self, other: "RatInterval") -> "RatInterval":
        other = _coerce(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other) -> "RatInterval":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RatInterval":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "RatInterval":
        other = _coerce(other)
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RatInterval(min(cands), max(cands))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatInterval":
        other = _coerce(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("division by interval containing zero")
        inv = RatInterval(Fraction(1) / other.hi, Fraction(1) / other.lo)
        return self * inv

    def pow_int(self, k: int) -> "RatInterval":
        if k < 0:
            raise ValueError("negative powers not supported; divide instead")
        result = RatInterval.point(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def abs_upper(self) -> Fraction:
        """Upper bound for |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def abs_interval(self) -> "RatInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RatInterval(Fraction(0), self.abs_upper())

    def contains(self, value) -> bool:
        v = Fraction(value)
        return self.lo <= v <= self.hi

    def contains_interval(self, other: "RatInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def is_nonpositive(self) -> bool:
        return self.hi <= 0

    def sign(self) -> int | None:
        """+1 / -1 when the sign is certain, else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __float__(self) -> float:
        return float(self.mid())

    def __repr__(self) -> str:
        return f"RatInterval({float(self.lo)!r}, {float(self.hi)!r})"


def _coerce(x) -> RatInterval:
    if isinstance(x, RatInterval):
        return x
    return RatInterval.point(x)


# 330 significant digits of pi; enough for the 256-digit precision cap plus
# slack for outward rounding.
PI_DIGITS = (
    "3."
    "1415926535897932384626433832795028841971693993751058209749445923"
    "0781640628620899862803482534211706798214808651328230664709384460"
    "9550582231725359408128481117450284102701938521105559644622948954"
    "9303819644288109756659334461284756482337867831652712019091456485"
    "6692346034861045432664821339360726024914127372458700660631558817"
    "488152092"
)

MAX_PI_DIGITS = 320


def pi_interval(precision_digits: int) -> RatInterval:
    """Interval containing pi with width <= 10**(1 - precision_digits).

    Intervals are nested: more digits always gives a sub-interval.
    """
    if precision_digits < 1:
        raise ValueError("precision_digits must be >= 1")
    if precision_digits > MAX_PI_DIGITS:
        raise ValueError(
            f"precision beyond stored digits ({MAX_PI_DIGITS})"
        )
    frac_digits = precision_digits - 1
    digits = PI_DIGITS.replace(".", "")[: 1 + frac_digits]
    lo = Fraction(int(digits), 10**frac_digits)
    return RatInterval(lo, lo + Fraction(1, 10 ** (precision_digits - 1)))


def sqrt_interval(value, precision_digits: int = 50) -> RatInterval:
    """Enclosure of sqrt(value) for a nonnegative rational or interval."""
    if isinstance(value, RatInterval):
        lo = sqrt_interval(value.lo, precision_digits).lo
        hi = sqrt_interval(value.hi, precision_digits).hi
        return RatInterval(lo, hi)
    v = Fraction(value)
    if v < 0:
        raise ValueError("sqrt of negative value")
    scale = 10**precision_digits
    # floor(sqrt(v * scale^2)) / scale <= sqrt(v) <= (floor + 1) / scale
    scaled = v.numerator * scale * scale // v.denominator
    root = isqrt(scaled)
    lo = Fraction(root, scale)
    hi = Fraction(root + 1, scale)
    if lo * lo > v:  # floor division of the radicand may undershoot
        lo = Fraction(root - 1, scale) if root else Fraction(0)
    return RatInterval(lo, hi)


def nth_root_interval(value, r: int, precision_digits: int = 50) -> RatInterval:
    """Enclosure of value**(1/r) for nonnegative rational/interval, r >= 1."""
    if r < 1:
        raise ValueError("root order must be >= 1")
    if isinstance(value, RatInterval):
        lo = nth_root_interval(value.lo, r, precision_digits).lo
        hi = nth_root_interval(value.hi, r, precision_digits).hi
        return RatInterval(lo, hi)
    v = Fraction(value)
    if v < 0:
        raise ValueError("even-style roots of negatives not supported")
    if r == 1:
        return RatInterval.point(v)
    scale = 10**precision_digits
    scaled = v.numerator * scale**r // v.denominator
    root = _int_nth_root(scaled, r)
    lo = Fraction(root, scale)
    hi = Fraction(root + 1, scale)
    if lo**r > v:
        lo = Fraction(root - 1, scale) if root else Fraction(0)
    return RatInterval(lo, hi)


def _int_nth_root(n: int, r: int) -> int:
    """floor(n ** (1/r)) for n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    if r == 1:
        return n
    if r == 2:
        return isqrt(n)
    # Newton iteration on integers, seeded from the bit length.
    x = 1 << (-(-n.bit_length() // r))
    while True:
        y = ((r - 1) * x + n // x ** (r - 1)) // r
        if y >= x:
            break
        x = y
    while x**r > n:
        x -= 1
    while (x + 1) ** r <= n:
        x += 1
    return x


def exp_point_interval(t, precision_digits: int = 50) -> RatInterval:
    """Enclosure of exp(t) for a rational t via Taylor sum plus tail bound."""
    t = Fraction(t)
    target = Fraction(1, 10 ** (precision_digits + 5))
    # Choose N >= 2|t| so the tail is dominated by a geometric series with
    # ratio <= 1/2, giving |tail| <= 2 |t|^(N+1) / (N+1)!.
    abs_t = abs(t)
    n = max(8, int(2 * abs_t) + 2)
    term = Fraction(1)
    total = Fraction(1)
    k = 0
    while True:
        k += 1
        term = term * t / k
        total += term
        if k >= n:
            tail = 2 * abs(term) * abs_t / (k + 1)
            if tail < target * max(Fraction(1), abs(total)):
                break
        if k > 5000:
            raise RuntimeError("exp series failed to converge")
    return RatInterval(total - tail, total + tail)


def exp_interval(x, precision_digits: int = 50) -> RatInterval:
    """Enclosure of exp over a rational point or interval (exp is monotone)."""
    if isinstance(x, RatInterval):
        lo = exp_point_interval(x.lo, precision_digits).lo
        hi = exp_point_interval(x.hi, precision_digits).hi
        return RatInterval(lo, hi)
    return exp_point_interval(x, precision_digits)
