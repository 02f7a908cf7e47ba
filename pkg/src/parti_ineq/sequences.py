"""Exact computation and persistence of p(n) and the overpartition count.

Values are produced by classical sparse recurrences (pentagonal-number
recurrence for partitions, a theta-series recurrence for overpartitions) so
that every stored number is an exact Python integer.  A cache is an
append-only contiguous array 0..max_n; once extended it is never mutated in
place, so concurrent readers are safe.

Cache file format (bit-exact)::

    #partition-cache v1 base=<p|pbar> max_n=<N>
    #sha256=<64 lowercase hex chars>
    0<TAB>1
    1<TAB>...

The digest covers the exact byte payload of the data lines (line 3 to end).
"""

from __future__ import annotations

import hashlib
import os
import re
import tempfile
from dataclasses import dataclass
from enum import Enum
from math import comb, isqrt
from pathlib import Path

__all__ = [
    "BaseSequence",
    "SeqExpr",
    "SeqCache",
    "NotCachedError",
    "CacheFormatError",
    "CacheIntegrityError",
    "MAX_DIFF_ORDER",
    "default_cache_dir",
]

MAX_DIFF_ORDER = 16

CACHE_ENV_VAR = "PARTI_INEQ_CACHE"


class NotCachedError(LookupError):
    """Requested index beyond the cached range; extend the cache first."""


class CacheFormatError(ValueError):
    """Cache file violates the header or contiguity contract."""


class CacheIntegrityError(ValueError):
    """Cache file payload does not match its recorded digest."""


class BaseSequence(Enum):
    PARTITION = "p"
    OVERPARTITION = "pbar"

    @property
    def code(self) -> str:
        return self.value

    @staticmethod
    def from_code(code: str) -> "BaseSequence":
        for member in BaseSequence:
            if member.value == code:
                return member
        raise ValueError(f"unknown base sequence code: {code!r}")


@dataclass(frozen=True)
class SeqExpr:
    """A base sequence together with a forward-difference order."""

    base: BaseSequence
    diff_order: int = 0

    def __post_init__(self):
        if not 0 <= self.diff_order <= MAX_DIFF_ORDER:
            raise ValueError(
                f"diff_order must be in 0..{MAX_DIFF_ORDER}, "
                f"got {self.diff_order}"
            )

    def label(self) -> str:
        if self.diff_order == 0:
            return self.base.code
        return f"D{self.diff_order}[{self.base.code}]"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "parti-ineq"


class SeqCache:
    """Contiguous exact values of one base sequence, indices 0..max_n."""

    def __init__(self, base: BaseSequence):
        self.base = base
        self._values: list[int] = [1]
        self._pent: list[tuple[int, int]] = []  # (generalized pentagonal, sign)
        self._squares: list[int] = []

    @property
    def max_n(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> list[int]:
        return self._values

    # -- extension ---------------------------------------------------------

    def extend(self, up_to: int) -> "SeqCache":
        """Ensure values 0..up_to are present.  Idempotent, append-only."""
        if up_to < 0:
            raise ValueError("up_to must be >= 0")
        if up_to <= self.max_n:
            return self
        if self.base is BaseSequence.PARTITION:
            self._extend_partition(up_to)
        else:
            self._extend_overpartition(up_to)
        return self

    def _extend_partition(self, up_to: int) -> None:
        # p(n) = sum_k (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
        vals = self._values
        pent = self._pent
        k = len(pent) // 2 + 1
        while (k * (3 * k - 1)) // 2 <= up_to:
            sign = 1 if k % 2 else -1
            pent.append(((k * (3 * k - 1)) // 2, sign))
            pent.append(((k * (3 * k + 1)) // 2, sign))
            k += 1
        for n in range(len(vals), up_to + 1):
            total = 0
            for g, sign in pent:
                if g > n:
                    break
                total += sign * vals[n - g]
            vals.append(total)

    def _extend_overpartition(self, up_to: int) -> None:
        # pbar(n) = 2 * sum_{j>=1} (-1)^(j+1) pbar(n - j^2)
        vals = self._values
        squares = self._squares
        j = len(squares) + 1
        while j * j <= up_to:
            squares.append(j * j)
            j += 1
        for n in range(len(vals), up_to + 1):
            total = 0
            sign = 1
            for sq in squares:
                if sq > n:
                    break
                total += sign * vals[n - sq]
                sign = -sign
            vals.append(2 * total)

    # -- access ------------------------------------------------------------

    def value(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"negative index: {n}")
        if n > self.max_n:
            raise NotCachedError(
                f"index {n} beyond cached max_n={self.max_n}; extend first"
            )
        return self._values[n]

    def diff_value(self, k: int, n: int) -> int:
        """k-th forward difference at n: sum_j (-1)^(k-j) C(k,j) f(n+j)."""
        if not 0 <= k <= MAX_DIFF_ORDER:
            raise ValueError(f"diff order must be in 0..{MAX_DIFF_ORDER}")
        if n < 0:
            raise ValueError(f"negative index: {n}")
        if n + k > self.max_n:
            raise NotCachedError(
                f"diff_value({k}, {n}) needs index {n + k}; "
                f"cache covers 0..{self.max_n}"
            )
        vals = self._values
        total = 0
        for j in range(k + 1):
            term = comb(k, j) * vals[n + j]
            total += term if (k - j) % 2 == 0 else -term
        return total

    def diff_window(self, k: int, n: int, length: int) -> list[int]:
        """[diff_value(k, n + i) for i in range(length)] without rework."""
        if length < 1:
            raise ValueError("length must be >= 1")
        if not 0 <= k <= MAX_DIFF_ORDER:
            raise ValueError(f"diff order must be in 0..{MAX_DIFF_ORDER}")
        if n < 0:
            raise ValueError(f"negative index: {n}")
        top = n + k + length - 1
        if top > self.max_n:
            raise NotCachedError(
                f"diff_window needs index {top}; cache covers 0..{self.max_n}"
            )
        row = self._values[n : top + 1]
        for _ in range(k):
            row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        return row

    # -- persistence -------------------------------------------------------

    def _payload_bytes(self) -> bytes:
        lines = [f"{n}\t{v}\n" for n, v in enumerate(self._values)]
        return "".join(lines).encode("ascii")

    def payload_hash(self) -> str:
        return hashlib.sha256(self._payload_bytes()).hexdigest()

    def save(self, path) -> None:
        """Atomic write: temp file in the target directory, then rename."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = self._payload_bytes()
        digest = hashlib.sha256(payload).hexdigest()
        header = (
            f"#partition-cache v1 base={self.base.code} max_n={self.max_n}\n"
            f"#sha256={digest}\n"
        )
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(header.encode("ascii"))
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @staticmethod
    def load(path) -> "SeqCache":
        path = Path(path)
        raw = path.read_bytes()
        nl1 = raw.find(b"\n")
        nl2 = raw.find(b"\n", nl1 + 1) if nl1 >= 0 else -1
        if nl1 < 0 or nl2 < 0:
            raise CacheFormatError(f"{path}: missing header lines")
        line1 = raw[:nl1].decode("ascii", errors="replace")
        line2 = raw[nl1 + 1 : nl2].decode("ascii", errors="replace")
        m = re.fullmatch(
            r"#partition-cache v1 base=(p|pbar) max_n=(\d+)", line1
        )
        if not m:
            raise CacheFormatError(f"{path}: bad header line: {line1!r}")
        base = BaseSequence.from_code(m.group(1))
        max_n = int(m.group(2))
        m2 = re.fullmatch(r"#sha256=([0-9a-f]{64})", line2)
        if not m2:
            raise CacheFormatError(f"{path}: bad digest line: {line2!r}")
        payload = raw[nl2 + 1 :]
        digest = hashlib.sha256(payload).hexdigest()
        if digest != m2.group(1):
            raise CacheIntegrityError(
                f"{path}: payload digest mismatch "
                f"(recorded {m2.group(1)[:12]}..., got {digest[:12]}...)"
            )
        values: list[int] = []
        for i, line in enumerate(payload.decode("ascii").splitlines()):
            parts = line.split("\t")
            if len(parts) != 2:
                raise CacheFormatError(f"{path}: malformed data line {i}")
            n, v = parts
            if int(n) != i:
                raise CacheFormatError(
                    f"{path}: non-contiguous index {n} at position {i}"
                )
            value = int(v)
            if value < 0:
                raise CacheFormatError(f"{path}: negative value at {i}")
            values.append(value)
        if len(values) != max_n + 1:
            raise CacheFormatError(
                f"{path}: expected {max_n + 1} values, found {len(values)}"
            )
        if values[0] != 1:
            raise CacheFormatError(f"{path}: value at index 0 must be 1")
        cache = SeqCache(base)
        cache._values = values
        return cache

    def __repr__(self) -> str:
        return f"SeqCache({self.base.code}, max_n={self.max_n})"


class CachePool:
    """Lazily built caches per base, shared by scans and certificates."""

    def __init__(self):
        self._caches: dict[BaseSequence, SeqCache] = {}

    def get(self, base: BaseSequence, up_to: int = 0) -> SeqCache:
        cache = self._caches.get(base)
        if cache is None:
            cache = SeqCache(base)
            self._caches[base] = cache
        cache.extend(up_to)
        return cache


# Functional aliases mirroring the operation-style surface.

def extend_cache(cache: SeqCache, up_to: int) -> SeqCache:
    return cache.extend(up_to)


def base_value(cache: SeqCache, n: int) -> int:
    return cache.value(n)


def diff_value(cache: SeqCache, k: int, n: int) -> int:
    return cache.diff_value(k, n)


def diff_window(cache: SeqCache, k: int, n: int, length: int) -> list[int]:
    return cache.diff_window(k, n, length)


def save_cache(cache: SeqCache, path) -> None:
    cache.save(path)


def load_cache(path) -> SeqCache:
    return SeqCache.load(path)
