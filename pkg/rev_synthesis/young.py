"""
Young Subgroup Synthesis

Decompose a reversible function one variable at a time into
f = T_g2 o f' o T_g1, where T_g1 and T_g2 are single-target gates acting on
the chosen variable and f' leaves that variable unchanged. Repeating over
all n variables yields a V-shaped cascade of at most 2n - 1 gates.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from rev_boolfn.truth_table import (
    BooleanFunctionError,
    ControlFunction,
    Permutation,
    TruthTable,
    var_shift,
)
from rev_circuit.gates import Circuit, SingleTargetGate, map_circuit_to_toffoli


class SynthesisError(BooleanFunctionError):
    """Base exception for synthesis operations."""
    pass


def _remove_bit(states: np.ndarray, shift: int) -> np.ndarray:
    return ((states >> (shift + 1)) << shift) | (states & ((1 << shift) - 1))


def _insert_bit(rest: np.ndarray, shift: int, value: int) -> np.ndarray:
    return ((rest >> shift) << (shift + 1)) | (value << shift) | (rest & ((1 << shift) - 1))


def _apply_stg(states: np.ndarray, g: np.ndarray, shift: int) -> np.ndarray:
    return states ^ (g[_remove_bit(states, shift)] << shift)


def other_lines(n: int, var: int) -> Tuple[int, ...]:
    return tuple(line for line in range(1, n + 1) if line != var)


@dataclass(frozen=True)
class DecompositionStep:
    """
    One step f = T_g2 o inner o T_g1 on variable `var`.

    g1 and g2 are over the other n - 1 variables in ascending line order.
    """

    var: int
    g1: ControlFunction
    g2: ControlFunction
    inner: Permutation

    def first_gate(self) -> SingleTargetGate:
        return SingleTargetGate(self.var, other_lines(self.inner.n, self.var), self.g1)

    def last_gate(self) -> SingleTargetGate:
        return SingleTargetGate(self.var, other_lines(self.inner.n, self.var), self.g2)


class YoungSubgroupSynthesizer:
    """
    Synthesize single-target gate cascades by iterated decomposition.

    The decomposition of a step is not unique. Cycles of the pairing graph
    are always traversed from their lowest input pair, starting at the row
    whose decomposed bit is 0, so the output is deterministic.
    """

    def __init__(self, order: Optional[Sequence[int]] = None, drop_identity: bool = True):
        self.order = tuple(order) if order is not None else None
        self.drop_identity = drop_identity
        self._logger = logging.getLogger(__name__)

    def resolve_order(self, n: int) -> Tuple[int, ...]:
        if self.order is None:
            return tuple(range(1, n + 1))
        if sorted(self.order) != list(range(1, n + 1)):
            raise SynthesisError(
                f"Variable order {list(self.order)} is not a permutation of 1..{n}"
            )
        return self.order

    def decompose_once(self, f: Permutation, var: int) -> DecompositionStep:
        """
        Split off the gates acting on `var`.

        Args:
            f: Permutation on n >= 1 lines
            var: Variable (line) index in 1..n

        Returns:
            DecompositionStep whose inner permutation preserves bit `var`

        Raises:
            BadVariable: If var is outside 1..n
        """
        n = f.n
        shift = var_shift(n, var)
        bit = 1 << shift

        fmap = np.array(f.map, dtype=np.int64)
        finv = np.empty_like(fmap)
        finv[fmap] = np.arange(fmap.size, dtype=np.int64)

        # label[a] is the colour of the edge for input row a
        label = np.full(fmap.size, -1, dtype=np.int64)
        starts = _insert_bit(np.arange(fmap.size >> 1, dtype=np.int64), shift, 0)
        for start in starts.tolist():
            if label[start] >= 0:
                continue
            a = start
            while True:
                label[a] = 0
                partner = int(finv[fmap[a] ^ bit])
                label[partner] = 1
                a = partner ^ bit
                if a == start:
                    break

        rest = np.arange(fmap.size >> 1, dtype=np.int64)
        g1 = label[_insert_bit(rest, shift, 0)]
        g2 = label[finv[_insert_bit(rest, shift, 0)]]

        states = np.arange(fmap.size, dtype=np.int64)
        inner = _apply_stg(fmap[_apply_stg(states, g1, shift)], g2, shift)

        self._logger.debug(
            "Decomposed on x%d: g1 weight %d, g2 weight %d", var, int(g1.sum()), int(g2.sum())
        )
        return DecompositionStep(
            var=var,
            g1=TruthTable(n - 1, 1, tuple(g1.tolist())),
            g2=TruthTable(n - 1, 1, tuple(g2.tolist())),
            inner=Permutation(n, tuple(inner.tolist())),
        )

    def decompose_all(self, f: Permutation) -> List[DecompositionStep]:
        """Every step in variable order; step.inner is the residual after it."""
        steps = []
        residual = f
        for var in self.resolve_order(f.n):
            step = self.decompose_once(residual, var)
            steps.append(step)
            residual = step.inner
        return steps

    def synthesize(self, f: Permutation) -> Circuit:
        """
        Build the V-shaped cascade: g1 gates in variable order, the merged
        gate of the last step, then the g2 gates in reverse order.
        """
        steps = self.decompose_all(f)
        if not steps:
            return Circuit(f.n, ())

        first_half = [step.first_gate() for step in steps[:-1]]
        last = steps[-1]
        merged = TruthTable(
            last.g1.n_inputs, 1, tuple(a ^ b for a, b in zip(last.g1.rows, last.g2.rows))
        )
        middle = SingleTargetGate(last.var, other_lines(f.n, last.var), merged)
        second_half = [step.last_gate() for step in reversed(steps[:-1])]

        gates = first_half + [middle] + second_half
        if self.drop_identity:
            gates = [gate for gate in gates if not gate.g.is_constant(0)]

        self._logger.debug("Synthesized %d-line function into %d gates", f.n, len(gates))
        return Circuit(f.n, tuple(gates))

    def synthesize_to_toffoli(self, f: Permutation, method: str = "pprm") -> Circuit:
        return map_circuit_to_toffoli(self.synthesize(f), method)


def decompose_once(f: Permutation, var: int) -> DecompositionStep:
    return YoungSubgroupSynthesizer().decompose_once(f, var)


def synth_young(f: Permutation, order: Optional[Sequence[int]] = None) -> Circuit:
    return YoungSubgroupSynthesizer(order).synthesize(f)


def synth_to_toffoli(
    f: Permutation,
    order: Optional[Sequence[int]] = None,
    method: str = "pprm",
) -> Circuit:
    return YoungSubgroupSynthesizer(order).synthesize_to_toffoli(f, method)
