"""
One-gate counting and exact minimal gate counts by breadth-first search.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from rev_analysis.bounds import LIBRARY_MCT, LIBRARY_MPMCT, AnalysisError, UnsupportedN
from rev_circuit.gates import Circuit, MpmctGate, circuit_perm


BFS_MAX_LINES = 3
ONE_GATE_MAX_LINES = 6


def one_gate_library(n: int, library: str = LIBRARY_MCT) -> List[MpmctGate]:
    """
    Every single gate on n lines: each target with every control subset
    ("mct") or every positive/negative/absent assignment ("mpmct").
    """
    if library not in (LIBRARY_MCT, LIBRARY_MPMCT):
        raise AnalysisError(f"Unknown gate library '{library}'")
    choices = (0, 1) if library == LIBRARY_MCT else (0, 1, -1)
    gates = []
    for target in range(1, n + 1):
        others = [line for line in range(1, n + 1) if line != target]
        for assignment in itertools.product(choices, repeat=len(others)):
            pos = frozenset(line for line, c in zip(others, assignment) if c == 1)
            neg = frozenset(line for line, c in zip(others, assignment) if c == -1)
            gates.append(MpmctGate(target, pos, neg))
    return gates


def count_one_gate_functions(n: int, library: str = LIBRARY_MCT) -> int:
    """Number of distinct permutations realized by a single gate."""
    if n < 1 or n > ONE_GATE_MAX_LINES:
        raise UnsupportedN(f"One-gate enumeration supports 1 <= n <= {ONE_GATE_MAX_LINES}, got {n}")
    distinct = {circuit_perm(Circuit(n, (gate,))).map for gate in one_gate_library(n, library)}
    return len(distinct)


@dataclass(frozen=True)
class OptimalSizeReport:
    n: int
    library: str
    worst_case: int
    histogram: Dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.histogram.values())


class OptimalSizeSearch:
    """
    Breadth-first search over the symmetric group on 2^n states.

    A permutation is packed into one integer (n bits per image) so the
    visited set is a flat boolean array of 2^(n 2^n) entries.
    """

    def __init__(self, n: int, library: str = LIBRARY_MCT):
        if n < 1 or n > BFS_MAX_LINES:
            raise UnsupportedN(
                f"Breadth-first search supports 1 <= n <= {BFS_MAX_LINES}, got {n}"
            )
        self.n = n
        self.library = library
        self._logger = logging.getLogger(__name__)

        size = 1 << n
        self._weights = np.array(
            [1 << (n * (size - 1 - r)) for r in range(size)], dtype=np.int64
        )
        self._generators = [
            np.array(circuit_perm(Circuit(n, (gate,))).map, dtype=np.int64)
            for gate in one_gate_library(n, library)
        ]

    def _codes(self, perms: np.ndarray) -> np.ndarray:
        return perms @ self._weights

    def run(self) -> OptimalSizeReport:
        size = 1 << self.n
        visited = np.zeros(1 << (self.n * size), dtype=bool)
        frontier = np.arange(size, dtype=np.int64)[np.newaxis, :]
        visited[self._codes(frontier)] = True
        histogram = {0: 1}
        depth = 0

        while True:
            # appending a gate: new[r] = gate[old[r]]
            candidates = np.concatenate([gen[frontier] for gen in self._generators])
            codes, first = np.unique(self._codes(candidates), return_index=True)
            fresh = ~visited[codes]
            if not fresh.any():
                break
            visited[codes[fresh]] = True
            frontier = candidates[first[fresh]]
            depth += 1
            histogram[depth] = int(frontier.shape[0])
            self._logger.debug("Depth %d: %d new functions", depth, histogram[depth])

        self._logger.info(
            "Exhausted %d functions on %d lines, worst case %d gates",
            sum(histogram.values()), self.n, depth,
        )
        return OptimalSizeReport(self.n, self.library, depth, histogram)


def bfs_optimal_sizes(n: int, library: str = LIBRARY_MCT) -> OptimalSizeReport:
    return OptimalSizeSearch(n, library).run()
