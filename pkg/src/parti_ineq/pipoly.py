"""Sparse exact polynomial arithmetic in Q[pi] and Q[pi][y, 1/y].

``PiPoly`` is a polynomial in the symbol pi with Fraction coefficients,
stored as a sparse exponent -> coefficient map.  ``PiLaurent`` is a Laurent
polynomial in one variable y whose coefficients are PiPoly values.  Both are
immutable value types with exact ring operations; pi is only ever evaluated
(as a rational interval) at the very end of a computation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exact import RatInterval

__all__ = ["PiPoly", "PiLaurent"]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class PiPoly:
    """Polynomial in pi over Q, e.g. {0: 3, 2: Fraction(-1, 4)} = 3 - pi^2/4."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = _as_fraction(c)
                if c:
                    if exp < 0:
                        raise ValueError("pi exponents must be >= 0")
                    clean[exp] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *args):
        raise AttributeError("PiPoly is immutable")

    @staticmethod
    def const(value) -> "PiPoly":
        return PiPoly({0: _as_fraction(value)})

    @staticmethod
    def pi_power(exp: int, coeff=1) -> "PiPoly":
        return PiPoly({exp: _as_fraction(coeff)})

    zero: "PiPoly"
    one: "PiPoly"

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PiPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == PiPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "PiPoly":
        other = self._coerce(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return PiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "PiPoly":
        return PiPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> "PiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PiPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "PiPoly":
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            if not f:
                return PiPoly()
            return PiPoly({e: c * f for e, c in self.coeffs.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return PiPoly(out)

    __rmul__ = __mul__

    @staticmethod
    def _coerce(x) -> "PiPoly":
        if isinstance(x, PiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return PiPoly.const(x)
        raise TypeError(f"cannot coerce {type(x)!r} to PiPoly")

    def denominator_lcm(self) -> int:
        d = 1
        for c in self.coeffs.values():
            d = d * c.denominator // gcd(d, c.denominator)
        return d

    def eval_interval(self, pi_iv: RatInterval) -> RatInterval:
        """Interval value with pi replaced by the given enclosure."""
        total = RatInterval.point(0)
        for e, c in self.coeffs.items():
            total = total + pi_iv.pow_int(e) * c
        return total

    def __repr__(self) -> str:
        if not self.coeffs:
            return "PiPoly(0)"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*pi")
            else:
                parts.append(f"{c}*pi^{e}")
        return "PiPoly(" + " + ".join(parts) + ")"


PiPoly.zero = PiPoly()
PiPoly.one = PiPoly.const(1)


class PiLaurent:
    """Laurent polynomial in y with PiPoly coefficients (finitely supported)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, poly in terms.items():
                if not isinstance(poly, PiPoly):
                    poly = PiPoly._coerce(poly)
                if poly:
                    clean[exp] = poly
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("PiLaurent is immutable")

    @staticmethod
    def const(value) -> "PiLaurent":
        return PiLaurent({0: PiPoly._coerce(value)})

    @staticmethod
    def y_power(exp: int, coeff=1) -> "PiLaurent":
        return PiLaurent({exp: PiPoly._coerce(coeff)})

    zero: "PiLaurent"
    one: "PiLaurent"
    y: "PiLaurent"

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, PiLaurent):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((e, p) for e, p in self.terms.items()))

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero Laurent polynomial has no degree")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero Laurent polynomial has no degree")
        return max(self.terms)

    def coeff(self, exp: int) -> PiPoly:
        return self.terms.get(exp, PiPoly.zero)

    def __add__(self, other) -> "PiLaurent":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, p in other.terms.items():
            s = out.get(e)
            s = p if s is None else s + p
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return PiLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "PiLaurent":
        return PiLaurent({e: -p for e, p in self.terms.items()})

    def __sub__(self, other) -> "PiLaurent":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PiLaurent":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "PiLaurent":
        if isinstance(other, (int, Fraction, PiPoly)):
            p = PiPoly._coerce(other)
            if not p:
                return PiLaurent()
            return PiLaurent({e: q * p for e, q in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, p1 in self.terms.items():
            for e2, p2 in other.terms.items():
                e = e1 + e2
                prod = p1 * p2
                s = out.get(e)
                s = prod if s is None else s + prod
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return PiLaurent(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "PiLaurent":
        """Multiply by y**k."""
        return PiLaurent({e + k: p for e, p in self.terms.items()})

    def pow_int(self, k: int) -> "PiLaurent":
        if k < 0:
            raise ValueError("negative powers of a Laurent polynomial")
        result = PiLaurent.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @staticmethod
    def _coerce(x) -> "PiLaurent":
        if isinstance(x, PiLaurent):
            return x
        if isinstance(x, (int, Fraction, PiPoly)):
            return PiLaurent.const(x)
        raise TypeError(f"cannot coerce {type(x)!r} to PiLaurent")

    def compose_poly(self, coeffs) -> "PiLaurent":
        """Evaluate sum_j coeffs[j] * self**j by Horner's rule.

        ``coeffs`` is an ascending list of rational coefficients of a
        univariate polynomial; used to push exp partial sums through a
        Laurent argument.
        """
        result = PiLaurent.zero
        for c in reversed(list(coeffs)):
            result = result * self + PiLaurent.const(c)
        return result

    def denominator_lcm(self) -> int:
        d = 1
        for p in self.terms.values():
            pd = p.denominator_lcm()
            d = d * pd // gcd(d, pd)
        return d

    def eval_interval(self, y, pi_iv: RatInterval) -> RatInterval:
        """Interval value at rational y > 0 with pi replaced by pi_iv."""
        y = Fraction(y)
        if y <= 0:
            raise ValueError("evaluation point must be positive")
        total = RatInterval.point(0)
        for e, p in self.terms.items():
            if e >= 0:
                yk = RatInterval.point(y**e)
            else:
                yk = RatInterval.point(Fraction(1) / y ** (-e))
            total = total + p.eval_interval(pi_iv) * yk
        return total

    def map_coeffs(self, fn) -> "PiLaurent":
        return PiLaurent({e: fn(p) for e, p in self.terms.items()})

    def to_json_dict(self) -> dict:
        """{y_exp: {pi_exp: "num/den"}} with string keys for JSON."""
        out = {}
        for e in sorted(self.terms):
            p = self.terms[e]
            out[str(e)] = {
                str(k): f"{c.numerator}/{c.denominator}"
                for k, c in sorted(p.coeffs.items())
            }
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "PiLaurent(0)"
        parts = []
        for e in sorted(self.terms, reverse=True):
            parts.append(f"y^{e}*({self.terms[e]!r})")
        return "PiLaurent[" + " + ".join(parts[:6]) + (
            " + ..." if len(parts) > 6 else "") + "]"


PiLaurent.zero = PiLaurent()
PiLaurent.one = PiLaurent.const(1)
PiLaurent.y = PiLaurent.y_power(1)
