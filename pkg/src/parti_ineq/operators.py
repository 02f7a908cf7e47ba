"""Exact inequality operators on integer windows.

All functions take a window of consecutive sequence values (the window's
lowest index is the caller's anchor n) and return an exact signed integer.
Predicates over these values live in the thresholds module; here there is no
notion of strictness, only values.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

__all__ = [
    "IneqKind",
    "laguerre_value",
    "turan2_value",
    "turan3_value",
    "toeplitz_det",
    "invariants",
    "logconcave_from_window",
    "logconcave_iter",
    "KIND_NAMES",
]

MAX_LAGUERRE_ORDER = 16
MAX_DET_ORDER = 16
MAX_LOGC_ITER = 8


def _check_window(w: Sequence[int], expected: int, what: str) -> None:
    if len(w) != expected:
        raise ValueError(
            f"{what} needs a window of length {expected}, got {len(w)}"
        )


def laguerre_value(w: Sequence[int], m: int) -> int:
    """Discrete Laguerre form of order m on 2m+1 consecutive values.

    Equals (1/2) * sum_{k=0}^{2m} (-1)^(k+m) C(2m,k) a_{n+k} a_{n+2m-k},
    computed as an exact integer by pairing the symmetric terms; the centre
    binomial coefficient is even, so the half never leaves the integers.
    """
    if not 1 <= m <= MAX_LAGUERRE_ORDER:
        raise ValueError(f"Laguerre order must be in 1..{MAX_LAGUERRE_ORDER}")
    _check_window(w, 2 * m + 1, f"laguerre_value(m={m})")
    total = 0
    for k in range(m):
        term = comb(2 * m, k) * w[k] * w[2 * m - k]
        total += term if (k + m) % 2 == 0 else -term
    centre = comb(2 * m, m)
    assert centre % 2 == 0
    total += (centre // 2) * w[m] * w[m]
    return total


def turan2_value(w: Sequence[int]) -> int:
    """a1^2 - a0*a2 on a window (a0, a1, a2)."""
    _check_window(w, 3, "turan2_value")
    return w[1] * w[1] - w[0] * w[2]


def turan3_value(w: Sequence[int]) -> int:
    """Third-order Turan slack on a window (a0, a1, a2, a3).

    Returns 4(a1^2 - a0 a2)(a2^2 - a1 a3) - (a1 a2 - a0 a3)^2; the inequality
    "holds" at this window when the value is nonnegative (strict: positive).
    """
    _check_window(w, 4, "turan3_value")
    a0, a1, a2, a3 = w
    lhs = 4 * (a1 * a1 - a0 * a2) * (a2 * a2 - a1 * a3)
    rhs = (a1 * a2 - a0 * a3) ** 2
    return lhs - rhs


def toeplitz_det(w: Sequence[int], m: int) -> int:
    """Determinant of the m x m Toeplitz matrix drawn from a 2m-1 window.

    Matrix entry M[i][j] = a_{n+m-i+j-1} (1-based), so the top-left entry is
    a_{n+m-1}, the bottom-left is a_n and the top-right a_{n+2m-2}.  Uses
    fraction-free Bareiss elimination with row pivoting.
    """
    if not 1 <= m <= MAX_DET_ORDER:
        raise ValueError(f"determinant order must be in 1..{MAX_DET_ORDER}")
    _check_window(w, 2 * m - 1, f"toeplitz_det(m={m})")
    if m == 1:
        return w[0]
    if m == 2:
        return w[1] * w[1] - w[0] * w[2]
    if m == 3:
        a0, a1, a2, a3, a4 = w
        return (
            a2**3 - 2 * a1 * a2 * a3 + a0 * a3 * a3
            + a1 * a1 * a4 - a0 * a2 * a4
        )
    matrix = [[w[m - 1 - i + j] for j in range(m)] for i in range(m)]
    return bareiss_determinant(matrix)


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix.

    Every division below is exact; intermediate entries are minors of the
    input, which keeps growth polynomial instead of exponential.
    """
    a = [row[:] for row in matrix]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def cofactor_determinant(matrix: list[list[int]]) -> int:
    """Naive cofactor expansion; exponential, for cross-checks only."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = matrix[0][j] * cofactor_determinant(minor)
        total += term if j % 2 == 0 else -term
    return total


def invariants(w: Sequence[int]) -> tuple[int, int, int]:
    """Binary-form invariants (A, B, I) of five consecutive values.

    A = a0 a4 - 4 a1 a3 + 3 a2^2,
    B = -a0 a2 a4 + a2^3 + a0 a3^2 + a1^2 a4 - 2 a1 a2 a3,
    I = A^3 - 27 B^2.
    """
    _check_window(w, 5, "invariants")
    a0, a1, a2, a3, a4 = w
    inv_a = a0 * a4 - 4 * a1 * a3 + 3 * a2 * a2
    inv_b = -a0 * a2 * a4 + a2**3 + a0 * a3 * a3 + a1 * a1 * a4 - 2 * a1 * a2 * a3
    inv_i = inv_a**3 - 27 * inv_b * inv_b
    return inv_a, inv_b, inv_i


def logconcave_from_window(w: Sequence[int], r: int) -> int:
    """r-fold iterated Turan operator collapsed from a 2r+1 window.

    Level zero is the window itself; each level maps consecutive triples
    (b0, b1, b2) to b1^2 - b0 b2, so the pyramid narrows by two per level.
    """
    if not 1 <= r <= MAX_LOGC_ITER:
        raise ValueError(f"iteration depth must be in 1..{MAX_LOGC_ITER}")
    _check_window(w, 2 * r + 1, f"logconcave(r={r})")
    level = list(w)
    for _ in range(r):
        level = [
            level[i + 1] * level[i + 1] - level[i] * level[i + 2]
            for i in range(len(level) - 2)
        ]
    assert len(level) == 1
    return level[0]


def logconcave_iter(expr, cache, r: int, n: int) -> int:
    """Iterated Turan value for a SeqExpr at window start n."""
    window = cache.diff_window(expr.diff_order, n, 2 * r + 1)
    return logconcave_from_window(window, r)


@dataclass(frozen=True)
class IneqKind:
    """An inequality operator tag plus predicate strictness.

    name is one of: turan2, turan3, laguerre, det, logc, invA, invB, invI.
    ``param`` is the order m (laguerre, det) or iteration depth r (logc).
    Strict predicates use value > 0, non-strict use value >= 0.
    """

    name: str
    param: int | None = None
    strict: bool = True

    def __post_init__(self):
        if self.name not in KIND_NAMES:
            raise ValueError(f"unknown inequality kind: {self.name!r}")
        needs_param = self.name in ("laguerre", "det", "logc")
        if needs_param:
            if self.param is None:
                raise ValueError(f"{self.name} requires an order parameter")
            cap = {"laguerre": MAX_LAGUERRE_ORDER,
                   "det": MAX_DET_ORDER,
                   "logc": MAX_LOGC_ITER}[self.name]
            if not 1 <= self.param <= cap:
                raise ValueError(
                    f"{self.name} order must be in 1..{cap}, got {self.param}"
                )
        elif self.param is not None:
            raise ValueError(f"{self.name} takes no order parameter")

    @property
    def arity(self) -> int:
        if self.name == "turan2":
            return 3
        if self.name == "turan3":
            return 4
        if self.name == "laguerre":
            return 2 * self.param + 1
        if self.name == "det":
            return 2 * self.param - 1
        if self.name == "logc":
            return 2 * self.param + 1
        return 5  # invA / invB / invI

    def value(self, window: Sequence[int]) -> int:
        if self.name == "turan2":
            return turan2_value(window)
        if self.name == "turan3":
            return turan3_value(window)
        if self.name == "laguerre":
            return laguerre_value(window, self.param)
        if self.name == "det":
            return toeplitz_det(window, self.param)
        if self.name == "logc":
            return logconcave_from_window(window, self.param)
        idx = {"invA": 0, "invB": 1, "invI": 2}[self.name]
        return invariants(window)[idx]

    def holds(self, value: int) -> bool:
        return value > 0 if self.strict else value >= 0

    def label(self) -> str:
        base = self.name if self.param is None else f"{self.name}:{self.param}"
        return base + ("" if self.strict else ">=")

    @staticmethod
    def parse(text: str, strict: bool = True) -> "IneqKind":
        """Parse CLI-style specs like 'laguerre:2', 'det:3', 'turan2'."""
        if ":" in text:
            name, _, param = text.partition(":")
            return IneqKind(name, int(param), strict)
        return IneqKind(text, None, strict)


KIND_NAMES = (
    "turan2",
    "turan3",
    "laguerre",
    "det",
    "logc",
    "invA",
    "invB",
    "invI",
)
