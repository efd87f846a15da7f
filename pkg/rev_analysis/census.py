"""
Complexity Census

Classify reversible functions by the cost of their synthesized circuits:
the number of single-target gates, and the number of product terms each
gate's control function needs (PPRM and greedy ESOP), which is the
Toffoli count after mapping.

The census reports raw distributions only. It does not assign functions
to cost classes.
"""

import itertools
import logging
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from rev_analysis.bounds import UnsupportedN
from rev_boolfn.truth_table import Permutation
from rev_circuit.gates import circuit_perm
from rev_esop.cube import term_count
from rev_esop.expansion import esop_davio, pprm
from rev_synthesis.young import YoungSubgroupSynthesizer


EXHAUSTIVE_CENSUS_MAX_LINES = 3
DEFAULT_SAMPLES = 10000
SAMPLED_CENSUS_MAX_LINES = 8
CHUNK_SIZE = 256

CENSUS_COLUMNS = [
    "function_index",
    "stg_count",
    "max_pprm_terms",
    "max_esop_terms",
    "toffoli_count_pprm",
    "toffoli_count_esop",
    "equivalent",
]
DISTRIBUTION_COLUMNS = ["stg_count", "max_pprm_terms", "max_esop_terms", "toffoli_count_pprm", "toffoli_count_esop"]


@dataclass(frozen=True)
class ComplexityProfile:
    stg_count: int
    pprm_terms: Tuple[int, ...]
    esop_terms: Tuple[int, ...]
    toffoli_count_pprm: int
    toffoli_count_esop: int
    equivalent: bool

    @property
    def max_pprm_terms(self) -> int:
        return max(self.pprm_terms, default=0)

    @property
    def max_esop_terms(self) -> int:
        return max(self.esop_terms, default=0)


def classify_function(f: Permutation, order: Optional[Sequence[int]] = None) -> ComplexityProfile:
    circuit = YoungSubgroupSynthesizer(order).synthesize(f)
    pprm_terms = tuple(term_count(pprm(gate.g)) for gate in circuit.gates)
    esop_terms = tuple(term_count(esop_davio(gate.g)) for gate in circuit.gates)
    return ComplexityProfile(
        stg_count=len(circuit.gates),
        pprm_terms=pprm_terms,
        esop_terms=esop_terms,
        toffoli_count_pprm=sum(pprm_terms),
        toffoli_count_esop=sum(esop_terms),
        equivalent=circuit_perm(circuit) == f,
    )


def _classify_chunk(job: Tuple[int, int, List[Tuple[int, ...]], Optional[Tuple[int, ...]]]) -> List[tuple]:
    start, n, maps, order = job
    rows = []
    for offset, images in enumerate(maps):
        profile = classify_function(Permutation(n, images), order)
        rows.append((
            start + offset,
            profile.stg_count,
            profile.max_pprm_terms,
            profile.max_esop_terms,
            profile.toffoli_count_pprm,
            profile.toffoli_count_esop,
            profile.equivalent,
        ))
    return rows


@dataclass
class CensusResult:
    n: int
    exhaustive: bool
    seed: Optional[int]
    table: pd.DataFrame

    @property
    def size(self) -> int:
        return len(self.table)

    def distribution(self, column: str) -> pd.DataFrame:
        counts = self.table[column].value_counts().sort_index()
        return pd.DataFrame({"value": counts.index, "count": counts.values})

    def summary(self) -> pd.DataFrame:
        """Long-form distribution table: metric, value, count."""
        frames = []
        for column in DISTRIBUTION_COLUMNS:
            frame = self.distribution(column)
            frame.insert(0, "metric", column)
            frames.append(frame)
        return pd.concat(frames, ignore_index=True)

    def within_term_budget(self, terms: int) -> int:
        """Functions whose every gate maps to at most `terms` ESOP cubes."""
        return int((self.table["max_esop_terms"] <= terms).sum())

    @property
    def equivalent_count(self) -> int:
        """Functions whose synthesized circuit simulates back to the function."""
        return int(self.table["equivalent"].sum())

    def within_gate_bound(self) -> int:
        """Functions realized with at most 2n - 1 single-target gates."""
        return int((self.table["stg_count"] <= 2 * self.n - 1).sum())

    def to_csv(self, path: str) -> None:
        self.table.to_csv(path, index=False)


class ComplexityCensus:
    """
    Aggregate complexity profiles over all reversible functions on n lines
    (n <= EXHAUSTIVE_CENSUS_MAX_LINES) or over a seeded random sample.

    Samples are drawn in the parent process before any work is split, so
    the table does not depend on the worker count.
    """

    def __init__(
        self,
        n: int,
        samples: int = DEFAULT_SAMPLES,
        seed: int = 0,
        workers: int = 1,
        order: Optional[Sequence[int]] = None,
        exhaustive: Optional[bool] = None,
    ):
        if n < 1:
            raise UnsupportedN(f"n must be at least 1, got {n}")
        if exhaustive is None:
            exhaustive = n <= EXHAUSTIVE_CENSUS_MAX_LINES
        if exhaustive and n > EXHAUSTIVE_CENSUS_MAX_LINES:
            raise UnsupportedN(
                f"Exhaustive census supports n <= {EXHAUSTIVE_CENSUS_MAX_LINES}, got {n}; "
                "use sampling instead"
            )
        if not exhaustive and n > SAMPLED_CENSUS_MAX_LINES:
            raise UnsupportedN(f"Sampled census supports n <= {SAMPLED_CENSUS_MAX_LINES}, got {n}")
        if samples < 1:
            raise UnsupportedN(f"Sample count must be positive, got {samples}")

        self.n = n
        self.samples = samples
        self.seed = seed
        self.workers = max(1, workers)
        self.order = tuple(order) if order is not None else None
        self.exhaustive = exhaustive
        self._logger = logging.getLogger(__name__)

    def functions(self) -> List[Tuple[int, ...]]:
        size = 1 << self.n
        if self.exhaustive:
            return list(itertools.permutations(range(size)))
        rng = np.random.default_rng(self.seed)
        return [tuple(rng.permutation(size).tolist()) for _ in range(self.samples)]

    def run(self) -> CensusResult:
        maps = self.functions()
        self._logger.info(
            "Census on %d lines: %d functions (%s)",
            self.n, len(maps), "exhaustive" if self.exhaustive else f"seed {self.seed}",
        )
        jobs = [
            (start, self.n, maps[start:start + CHUNK_SIZE], self.order)
            for start in range(0, len(maps), CHUNK_SIZE)
        ]

        if self.workers > 1 and len(jobs) > 1:
            with Pool(processes=self.workers) as pool:
                chunks = pool.map(_classify_chunk, jobs)
        else:
            chunks = [_classify_chunk(job) for job in jobs]

        rows = [row for chunk in chunks for row in chunk]
        table = pd.DataFrame(rows, columns=CENSUS_COLUMNS)
        return CensusResult(
            n=self.n,
            exhaustive=self.exhaustive,
            seed=None if self.exhaustive else self.seed,
            table=table,
        )


def census(n: int, **kwargs) -> CensusResult:
    return ComplexityCensus(n, **kwargs).run()


def census_distributions(result: CensusResult) -> Dict[str, pd.DataFrame]:
    return {column: result.distribution(column) for column in DISTRIBUTION_COLUMNS}
