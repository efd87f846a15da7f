"""
Expansion rules and AND-EXOR expression construction.

Shannon:          f = !xi f0 ^ xi f1
positive Davio:   f = f0 ^ xi (f0 ^ f1)
negative Davio:   f = f1 ^ !xi (f0 ^ f1)

where f0 / f1 are the cofactors with xi = 0 / xi = 1.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from rev_boolfn.truth_table import (
    BooleanFunctionError,
    TruthTable,
    cofactor,
    var_shift,
)
from rev_esop.cube import Cube, EsopError, EsopExpr


SHANNON = "shannon"
POSITIVE_DAVIO = "positive_davio"
NEGATIVE_DAVIO = "negative_davio"
EXPANSION_RULES = (SHANNON, POSITIVE_DAVIO, NEGATIVE_DAVIO)

POLICY_PPRM = "pprm"
POLICY_FIXED = "fixed"
POLICY_GREEDY = "greedy"
POLICIES = (POLICY_PPRM, POLICY_FIXED, POLICY_GREEDY)

_logger = logging.getLogger(__name__)

# raw (care, polarity) pairs produced by the recursive expansion
_RawCubes = Tuple[Tuple[int, int], ...]


def _xor_tables(a: TruthTable, b: TruthTable) -> TruthTable:
    return TruthTable(a.n_inputs, a.n_outputs, tuple(x ^ y for x, y in zip(a.rows, b.rows)))


def expand_shannon(f: TruthTable, i: int) -> Tuple[TruthTable, TruthTable]:
    """Return (f with xi=0, f with xi=1)."""
    return cofactor(f, i, 0), cofactor(f, i, 1)


def expand_davio_pos(f: TruthTable, i: int) -> Tuple[TruthTable, TruthTable]:
    """Return (f0, f0 ^ f1) for f = f0 ^ xi (f0 ^ f1)."""
    f0, f1 = expand_shannon(f, i)
    return f0, _xor_tables(f0, f1)


def expand_davio_neg(f: TruthTable, i: int) -> Tuple[TruthTable, TruthTable]:
    """Return (f1, f0 ^ f1) for f = f1 ^ !xi (f0 ^ f1)."""
    f0, f1 = expand_shannon(f, i)
    return f1, _xor_tables(f0, f1)


def recompose(rule: str, a: TruthTable, b: TruthTable, i: int) -> TruthTable:
    """
    Rebuild f over n = a.n_inputs + 1 variables from the pair returned by
    the expansion rule, with the expansion variable reinserted as x_i.
    """
    if rule not in EXPANSION_RULES:
        raise EsopError(f"Unknown expansion rule '{rule}'")
    if a.n_inputs != b.n_inputs or a.n_outputs != b.n_outputs:
        raise BooleanFunctionError("Expansion parts must have the same shape")

    n = a.n_inputs + 1
    shift = var_shift(n, i)
    states = np.arange(1 << n, dtype=np.int64)
    xi = (states >> shift) & 1
    rest = ((states >> (shift + 1)) << shift) | (states & ((1 << shift) - 1))
    av = a.as_array()[rest]
    bv = b.as_array()[rest]

    if rule == SHANNON:
        rows = np.where(xi == 1, bv, av)
    elif rule == POSITIVE_DAVIO:
        rows = av ^ (bv * xi)
    else:
        rows = av ^ (bv * (1 - xi))
    return TruthTable(n, a.n_outputs, tuple(rows.tolist()))


def _require_single_output(f: TruthTable) -> None:
    if f.n_outputs != 1:
        raise EsopError(f"Expected a single-output function, got {f.n_outputs} outputs")


def reed_muller_coefficients(f: TruthTable) -> np.ndarray:
    """
    In-place butterfly over the value vector; coefficient r is 1 iff the
    positive monomial over the variables set in r appears in the PPRM.
    """
    _require_single_output(f)
    coeffs = np.array(f.rows, dtype=np.uint8)
    for k in range(f.n_inputs):
        step = 1 << k
        view = coeffs.reshape(-1, 2, step)
        view[:, 1, :] ^= view[:, 0, :]
    return coeffs


def pprm(f: TruthTable) -> EsopExpr:
    coeffs = reed_muller_coefficients(f)
    monomials = np.flatnonzero(coeffs)
    cubes = tuple(Cube(f.n_inputs, int(m), int(m)) for m in monomials)
    return EsopExpr(f.n_inputs, cubes)


def _literals(cubes: _RawCubes) -> int:
    return sum(bin(care).count("1") for care, _ in cubes)


class _DavioExpander:
    """
    Recursive expansion over the value vector packed into an int.

    The variable split at depth k is the most significant of the k
    remaining ones, so its mask bit is 1 << (k - 1) in the full frame.
    """

    def __init__(self, n: int, policy: str, polarities: Optional[Sequence[int]]):
        self.n = n
        self.policy = policy
        self.polarities = polarities
        self.memo: Dict[Tuple[int, int], _RawCubes] = {}

    def expand(self, value: int, k: int) -> _RawCubes:
        if value == 0:
            return ()
        if k == 0:
            return ((0, 0),)
        key = (k, value)
        cached = self.memo.get(key)
        if cached is not None:
            return cached

        half = 1 << (k - 1)
        lo = value & ((1 << half) - 1)
        hi = value >> half
        diff = lo ^ hi
        bit = 1 << (k - 1)

        if self.policy == POLICY_GREEDY:
            candidates = [
                self._positive(lo, diff, k, bit),
                self._negative(hi, diff, k, bit),
                self._shannon(lo, hi, k, bit),
            ]
            # cube count first, then literal count; earlier rule wins ties
            result = min(candidates, key=lambda cubes: (len(cubes), _literals(cubes)))
        else:
            positive = True
            if self.policy == POLICY_FIXED:
                positive = bool(self.polarities[self.n - k])
            if positive:
                result = self._positive(lo, diff, k, bit)
            else:
                result = self._negative(hi, diff, k, bit)

        self.memo[key] = result
        return result

    def _positive(self, lo: int, diff: int, k: int, bit: int) -> _RawCubes:
        tail = tuple((care | bit, pol | bit) for care, pol in self.expand(diff, k - 1))
        return self.expand(lo, k - 1) + tail

    def _negative(self, hi: int, diff: int, k: int, bit: int) -> _RawCubes:
        tail = tuple((care | bit, pol) for care, pol in self.expand(diff, k - 1))
        return self.expand(hi, k - 1) + tail

    def _shannon(self, lo: int, hi: int, k: int, bit: int) -> _RawCubes:
        low = tuple((care | bit, pol) for care, pol in self.expand(lo, k - 1))
        high = tuple((care | bit, pol | bit) for care, pol in self.expand(hi, k - 1))
        return low + high


def esop_davio(
    f: TruthTable,
    policy: str = POLICY_GREEDY,
    polarities: Optional[Sequence[int]] = None,
) -> EsopExpr:
    """
    Build an ESOP by recursive expansion, one variable per level (x1 first).

    Args:
        f: Single-output function
        policy: "pprm" (positive Davio everywhere), "fixed" (per-variable
            polarity, 1 = positive Davio, 0 = negative Davio) or "greedy"
        polarities: Required for "fixed", one entry per variable x1..xn

    Returns:
        Expression with cubes in ascending (care, polarity) order

    The greedy policy is a heuristic: at every node it keeps whichever of
    positive Davio, negative Davio and Shannon yields the fewest cubes
    (then the fewest literals). It is never worse than the PPRM.
    """
    _require_single_output(f)
    if policy not in POLICIES:
        raise EsopError(f"Unknown policy '{policy}', expected one of {', '.join(POLICIES)}")
    if policy == POLICY_FIXED:
        if polarities is None or len(polarities) != f.n_inputs:
            raise EsopError(f"Fixed policy needs {f.n_inputs} polarities")
        if any(p not in (0, 1) for p in polarities):
            raise EsopError("Polarities must be 0 or 1")

    expander = _DavioExpander(f.n_inputs, policy, polarities)
    raw = expander.expand(f.as_bitmask(), f.n_inputs)
    cubes = sorted(Cube(f.n_inputs, care, pol) for care, pol in raw)
    _logger.debug(
        "Expanded %d-variable function with policy %s into %d cubes",
        f.n_inputs, policy, len(cubes),
    )
    return EsopExpr(f.n_inputs, tuple(cubes))


def expression_for(f: TruthTable, method: str) -> EsopExpr:
    """Expression used by the Toffoli mapping: "pprm" or "esop" (greedy)."""
    if method == "pprm":
        return pprm(f)
    if method == "esop":
        return esop_davio(f, POLICY_GREEDY)
    raise EsopError(f"Unknown mapping method '{method}', expected 'pprm' or 'esop'")
