"""
Half-V Circuits

n single-target gates on k >= n lines. Gate i targets line i and is
controlled by all other lines in ascending order. Before gate i fires,
lines 1..i-1 already hold the outputs y1..y(i-1) and lines i..k still hold
the inputs, so

    y_i = x_i ^ g_i(y_1, ..., y_(i-1), x_(i+1), ..., x_k)

and lines n+1..k pass through. Every such circuit realizes a different
permutation, so they are a canonical form for the functions they cover.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, List, Optional, Set, Tuple

import numpy as np

from rev_boolfn.truth_table import BooleanFunctionError, ControlFunction, Permutation, TruthTable
from rev_circuit.gates import Circuit, SingleTargetGate, circuit_perm
from rev_circuit.rc_format import CircuitParser, read_comments, serialize_circuit
from rev_synthesis.young import other_lines


MAX_HALFV_TUPLES = 2 ** 16

_HEADER = re.compile(r"^halfv\s+n=(\d+)\s+k=(\d+)$")


class EmbeddingError(BooleanFunctionError):
    """Base exception for half-V circuits and the embedding."""
    pass


class UnsupportedSize(EmbeddingError):
    pass


class HalfVFormatError(EmbeddingError):
    pass


class NotRealizable(EmbeddingError):
    """
    Permutation is not realized by any half-V circuit.

    gate_index is the first gate whose control function is inconsistent
    (None when only a pass-through line is violated); witness holds the
    inputs that expose the conflict.
    """

    def __init__(self, gate_index: Optional[int], line: int, witness: Tuple[int, ...]):
        self.gate_index = gate_index
        self.line = line
        self.witness = witness
        if gate_index is None:
            message = f"not realizable (line {line} changes on input {witness[0]})"
        else:
            message = (
                f"not realizable (gate {gate_index}, witness "
                f"{' / '.join(str(w) for w in witness)})"
            )
        super().__init__(message)


@dataclass(frozen=True)
class HalfVCircuit:
    k: int
    n: int
    gs: Tuple[ControlFunction, ...]

    def __post_init__(self):
        object.__setattr__(self, "gs", tuple(self.gs))
        if self.k < 1:
            raise UnsupportedSize(f"Half-V circuits need at least one line, got k={self.k}")
        if self.n < 0 or self.n > self.k:
            raise UnsupportedSize(f"Gate count n={self.n} must be in 0..k={self.k}")
        if len(self.gs) != self.n:
            raise EmbeddingError(f"Expected {self.n} control functions, got {len(self.gs)}")
        for i, g in enumerate(self.gs, start=1):
            if g.n_outputs != 1 or g.n_inputs != self.k - 1:
                raise EmbeddingError(
                    f"Control function {i} must be single-output over {self.k - 1} variables"
                )


def halfv_to_circuit(h: HalfVCircuit) -> Circuit:
    """Literal expansion; constant-0 gates are kept."""
    gates = tuple(
        SingleTargetGate(i, other_lines(h.k, i), g) for i, g in enumerate(h.gs, start=1)
    )
    return Circuit(h.k, gates)


def _rest(states: np.ndarray, shift: int) -> np.ndarray:
    return ((states >> (shift + 1)) << shift) | (states & ((1 << shift) - 1))


def tuple_count(n: int, k: int) -> int:
    """(2^(2^(k-1)))^n control function tuples."""
    return 1 << ((1 << (k - 1)) * n)


def _enumerate_chunk(job: Tuple[int, int, int]) -> Set[Tuple[int, ...]]:
    n, k, first_mask = job
    half = 1 << (k - 1)
    columns = np.arange(half, dtype=np.int64)
    tables = [(mask >> columns) & 1 for mask in range(1 << half)]
    base = np.arange(1 << k, dtype=np.int64)

    seen: Set[Tuple[int, ...]] = set()
    masks: Iterable[Tuple[int, ...]] = itertools.product(range(1 << half), repeat=n - 1)
    for rest_masks in masks:
        states = base
        for i, mask in enumerate((first_mask,) + rest_masks, start=1):
            shift = k - i
            states = states ^ (tables[mask][_rest(states, shift)] << shift)
        seen.add(tuple(states.tolist()))
    return seen


class HalfVEnumerator:
    """
    Count the distinct permutations realized by all half-V circuits with
    given (n, k). Work is split by the first gate's control function and
    per-worker sets are merged.
    """

    def __init__(self, workers: int = 1, max_tuples: int = MAX_HALFV_TUPLES):
        self.workers = max(1, workers)
        self.max_tuples = max_tuples
        self._logger = logging.getLogger(__name__)

    def count(self, n: int, k: int) -> int:
        if k < 1 or n < 1 or n > k:
            raise UnsupportedSize(f"Enumeration needs 1 <= n <= k, got n={n}, k={k}")
        total = tuple_count(n, k)
        if total > self.max_tuples:
            raise UnsupportedSize(
                f"(n={n}, k={k}) has {total} control function tuples; "
                f"the limit is {self.max_tuples}"
            )

        jobs = [(n, k, mask) for mask in range(1 << (1 << (k - 1)))]
        if self.workers > 1:
            with Pool(processes=self.workers) as pool:
                parts = pool.map(_enumerate_chunk, jobs)
        else:
            parts = [_enumerate_chunk(job) for job in jobs]

        distinct: Set[Tuple[int, ...]] = set()
        for part in parts:
            distinct |= part
        self._logger.info(
            "Enumerated %d tuples for n=%d, k=%d: %d distinct permutations",
            total, n, k, len(distinct),
        )
        return len(distinct)


def halfv_enumerate(n: int, k: int, workers: int = 1) -> int:
    return HalfVEnumerator(workers).count(n, k)


def halfv_recognize(p: Permutation, n: int) -> HalfVCircuit:
    """
    Extract the unique half-V circuit with n gates realizing p.

    Raises:
        UnsupportedSize: If n is outside 0..p.n
        NotRealizable: If no half-V circuit realizes p
    """
    k = p.n
    if k < 1 or n < 0 or n > k:
        raise UnsupportedSize(f"Gate count n={n} must be in 0..k={k}")

    x = np.arange(1 << k, dtype=np.int64)
    y = np.array(p.map, dtype=np.int64)
    pre = x.copy()
    gs: List[TruthTable] = []

    for i in range(1, n + 1):
        shift = k - i
        bit = 1 << shift
        key = _rest(pre, shift)
        h = ((y ^ x) >> shift) & 1

        g = np.zeros(1 << (k - 1), dtype=np.int64)
        g[key] = h
        bad = np.flatnonzero(g[key] != h)
        if bad.size:
            a = int(bad[0])
            inverse = np.empty_like(pre)
            inverse[pre] = x
            partner = int(inverse[pre[a] ^ bit])
            raise NotRealizable(i, i, tuple(sorted((a, partner))))

        gs.append(TruthTable(k - 1, 1, tuple(g.tolist())))
        pre = pre ^ (h << shift)

    for line in range(n + 1, k + 1):
        changed = np.flatnonzero(((y ^ x) >> (k - line)) & 1)
        if changed.size:
            raise NotRealizable(None, line, (int(changed[0]),))

    return HalfVCircuit(k, n, tuple(gs))


def serialize_halfv(h: HalfVCircuit) -> str:
    return serialize_circuit(halfv_to_circuit(h), comments=[f"halfv n={h.n} k={h.k}"])


def _literal_halfv(c: Circuit, n: int) -> Optional[HalfVCircuit]:
    if len(c.gates) != n:
        return None
    gs = []
    for i, gate in enumerate(c.gates, start=1):
        if not isinstance(gate, SingleTargetGate):
            return None
        if gate.target != i or gate.controls != other_lines(c.lines, i):
            return None
        gs.append(gate.g)
    return HalfVCircuit(c.lines, n, tuple(gs))


def parse_halfv(text: str) -> HalfVCircuit:
    """
    Read a half-V circuit from .rc text with a "# halfv n=<n> k=<k>"
    header. Circuits that are not literally in half-V shape are accepted
    when their permutation is half-V realizable.
    """
    lines = text.splitlines()
    header = None
    for comment in read_comments(lines):
        header = _HEADER.match(comment)
        if header:
            break
    if header is None:
        raise HalfVFormatError("missing '# halfv n=<n> k=<k>' header")
    n, k = int(header.group(1)), int(header.group(2))

    c = CircuitParser().parse_lines(lines)
    if c.lines != k:
        raise HalfVFormatError(f"header says k={k} but the circuit has {c.lines} lines")

    literal = _literal_halfv(c, n)
    if literal is not None:
        return literal
    return halfv_recognize(circuit_perm(c), n)


def read_halfv(filepath: str) -> HalfVCircuit:
    with open(filepath, "r", encoding="utf-8") as handle:
        return parse_halfv(handle.read())


def write_halfv(h: HalfVCircuit, output_path: str) -> None:
    with open(output_path, "w", encoding="utf-8") as handle:
        handle.write(serialize_halfv(h))
