"""Exact-arithmetic toolkit for difference inequalities of partition counts.

Computes partition and overpartition numbers exactly, evaluates Turan,
Laguerre, determinantal and invariant inequality operators on their forward
differences, locates positivity thresholds against embedded reference
tables, and replays asymptotic positivity proofs as machine-checked
certificates over Q[pi].
"""

from .exact import RatInterval, pi_interval
from .operators import (
    IneqKind,
    invariants,
    laguerre_value,
    logconcave_iter,
    toeplitz_det,
    turan2_value,
    turan3_value,
)
from .pipoly import PiLaurent, PiPoly
from .sequences import (
    BaseSequence,
    CacheFormatError,
    CacheIntegrityError,
    NotCachedError,
    SeqCache,
    SeqExpr,
    default_cache_dir,
)
from .thresholds import (
    ScanStatus,
    ThresholdQuery,
    ThresholdReport,
    evaluate_predicate,
    find_threshold,
    reproduce_table,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "BaseSequence",
    "SeqExpr",
    "SeqCache",
    "NotCachedError",
    "CacheFormatError",
    "CacheIntegrityError",
    "default_cache_dir",
    "IneqKind",
    "laguerre_value",
    "turan2_value",
    "turan3_value",
    "toeplitz_det",
    "invariants",
    "logconcave_iter",
    "ThresholdQuery",
    "ThresholdReport",
    "ScanStatus",
    "evaluate_predicate",
    "verify_range",
    "find_threshold",
    "reproduce_table",
    "RatInterval",
    "pi_interval",
    "PiPoly",
    "PiLaurent",
    "__version__",
]
