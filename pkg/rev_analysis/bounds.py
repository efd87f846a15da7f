"""
Gate Count Bounds

Counting lower bound on the worst-case Toffoli gate count of n-line
reversible functions: the least k with (n 2^(n-1))^k >= (2^n)!, plus the
growth inequality log2((2^n)!) >= 2^n n / 2 behind the asymptotic bound.

Small n is decided by exact integer comparison. Larger n uses interval
arithmetic (mpmath.iv) on Robbins' bounds for ln N!:

    N ln N - N + ln(2 pi N) / 2 + 1/(12N + 1) < ln N! < ... + 1/(12N)
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import pandas as pd
from mpmath import iv

from rev_boolfn.truth_table import MAX_VARIABLES, BooleanFunctionError


EXACT_BOUND_LIMIT = 10
EXACT_INDUCTION_LIMIT = 16
INTERVAL_PRECISION = 96

LIBRARY_MCT = "mct"
LIBRARY_MPMCT = "mpmct"
LIBRARIES = (LIBRARY_MCT, LIBRARY_MPMCT)

MODE_AUTO = "auto"
MODE_EXACT = "exact"
MODE_INTERVAL = "interval"

BOUNDS_COLUMNS = [
    "n",
    "lower_bound",
    "exact",
    "induction_ok",
    "induction_step_ok",
    "one_gate_functions",
    "bfs_worst_case",
]

_logger = logging.getLogger(__name__)


class AnalysisError(BooleanFunctionError):
    """Base exception for bound, counting and census operations."""
    pass


class UnsupportedN(AnalysisError):
    pass


@dataclass(frozen=True)
class BoundReport:
    n: int
    lower_bound: int
    exact: bool
    library: str = LIBRARY_MCT
    degenerate: bool = False


def one_gate_count(n: int, library: str = LIBRARY_MCT) -> int:
    """Number of distinct one-gate circuits on n lines."""
    if library == LIBRARY_MCT:
        return n * (1 << (n - 1))
    if library == LIBRARY_MPMCT:
        return n * 3 ** (n - 1)
    raise AnalysisError(f"Unknown gate library '{library}', expected one of {', '.join(LIBRARIES)}")


def _log_factorial_interval(n_items: int):
    nv = iv.mpf(n_items)
    core = nv * iv.log(nv) - nv + iv.log(2 * iv.pi * nv) / 2
    return core + 1 / (12 * nv + iv.mpf([0, 1]))


def _float_bounds(x) -> Tuple[float, float]:
    # float() rounds to nearest; one ulp outward keeps the enclosure
    return (
        math.nextafter(float(x.a), -math.inf),
        math.nextafter(float(x.b), math.inf),
    )


def _check_n(n: int) -> None:
    if n < 1:
        raise UnsupportedN(f"n must be at least 1, got {n}")
    if n > MAX_VARIABLES:
        raise UnsupportedN(f"n={n} exceeds the supported maximum of {MAX_VARIABLES}")


def _exact_lower_bound(n: int, base: int) -> int:
    target = math.factorial(1 << n)
    k = 0
    power = 1
    while power < target:
        power *= base
        k += 1
    return k


def _interval_lower_bound(n: int, base: int) -> Tuple[int, bool]:
    """Return (bound, certified)."""
    saved = iv.prec
    iv.prec = INTERVAL_PRECISION
    try:
        ratio = _log_factorial_interval(1 << n) / iv.log(base)
        low, high = _float_bounds(ratio)
    finally:
        iv.prec = saved
    k_low = math.ceil(low)
    k_high = math.ceil(high)
    return k_low, k_low == k_high


def lower_bound_toffoli(n: int, library: str = LIBRARY_MCT, mode: str = MODE_AUTO) -> BoundReport:
    """
    Lower bound on the gate count some n-line function requires.

    Args:
        n: Line count, 1..MAX_VARIABLES
        library: "mct" (n 2^(n-1) one-gate circuits) or "mpmct" (n 3^(n-1))
        mode: "auto" (exact up to EXACT_BOUND_LIMIT), "exact" or "interval"

    Returns:
        BoundReport; exact is False for interval results

    Raises:
        UnsupportedN: If n < 1, n is too large, or exact mode is requested
            beyond EXACT_BOUND_LIMIT
    """
    _check_n(n)
    base = one_gate_count(n, library)
    if n == 1:
        # log(1) = 0 in the denominator; a single NOT is needed
        _logger.warning("n=1 is degenerate for the counting bound; reporting 1")
        return BoundReport(1, 1, exact=True, library=library, degenerate=True)

    if mode not in (MODE_AUTO, MODE_EXACT, MODE_INTERVAL):
        raise AnalysisError(f"Unknown bound mode '{mode}'")
    use_exact = mode == MODE_EXACT or (mode == MODE_AUTO and n <= EXACT_BOUND_LIMIT)
    if use_exact:
        if n > EXACT_BOUND_LIMIT:
            raise UnsupportedN(
                f"Exact bound evaluation is limited to n <= {EXACT_BOUND_LIMIT}, got {n}"
            )
        return BoundReport(n, _exact_lower_bound(n, base), exact=True, library=library)

    bound, certified = _interval_lower_bound(n, base)
    if not certified:
        _logger.warning("Interval for n=%d straddles an integer; reporting the smaller bound", n)
    return BoundReport(n, bound, exact=False, library=library)


def check_induction_inequality(n: int) -> bool:
    """True iff log2((2^n)!) >= 2^n n / 2."""
    _check_n(n)
    size = 1 << n
    if n <= EXACT_INDUCTION_LIMIT:
        factorial = math.factorial(size)
        return factorial * factorial >= 1 << (size * n)

    saved = iv.prec
    iv.prec = INTERVAL_PRECISION
    try:
        low, high = _float_bounds(_log_factorial_interval(size) / iv.log(2))
    finally:
        iv.prec = saved
    threshold = size * n / 2
    if low >= threshold:
        return True
    if high < threshold:
        return False
    _logger.warning("Could not certify the growth inequality for n=%d", n)
    return False


def check_induction_step(n: int) -> bool:
    """True iff (2^(n+1))! >= ((2^n)!)^2 2^(2^n)."""
    _check_n(n)
    size = 1 << n
    if n < EXACT_INDUCTION_LIMIT:
        half = math.factorial(size)
        return math.factorial(2 * size) >= half * half << size

    saved = iv.prec
    iv.prec = INTERVAL_PRECISION
    try:
        margin = (
            _log_factorial_interval(2 * size)
            - 2 * _log_factorial_interval(size)
            - size * iv.log(2)
        )
        low, high = _float_bounds(margin)
    finally:
        iv.prec = saved
    if low >= 0:
        return True
    if high < 0:
        return False
    _logger.warning("Could not certify the induction step for n=%d", n)
    return False


def bounds_table(n_max: int, library: str = LIBRARY_MCT) -> pd.DataFrame:
    """
    One row per n = 2..n_max. one_gate_functions (enumerated) and
    bfs_worst_case (exact minimal worst case) are filled only where the
    enumeration is feasible and are missing otherwise.
    """
    from rev_analysis.counting import (
        BFS_MAX_LINES,
        ONE_GATE_MAX_LINES,
        bfs_optimal_sizes,
        count_one_gate_functions,
    )

    if n_max < 2:
        raise UnsupportedN(f"n_max must be at least 2, got {n_max}")
    _check_n(n_max)
    rows = []
    for n in range(2, n_max + 1):
        report = lower_bound_toffoli(n, library)
        rows.append({
            "n": n,
            "lower_bound": report.lower_bound,
            "exact": report.exact,
            "induction_ok": check_induction_inequality(n),
            "induction_step_ok": check_induction_step(n),
            "one_gate_functions": (
                count_one_gate_functions(n, library) if n <= ONE_GATE_MAX_LINES else None
            ),
            "bfs_worst_case": (
                bfs_optimal_sizes(n, library).worst_case if n <= BFS_MAX_LINES else None
            ),
        })
        _logger.info("n=%d: lower bound %d", n, report.lower_bound)
    table = pd.DataFrame(rows, columns=BOUNDS_COLUMNS)
    for column in ("one_gate_functions", "bfs_worst_case"):
        table[column] = table[column].astype("Int64")
    return table
