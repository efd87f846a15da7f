"""
Reversible gates and circuits.

Lines are numbered 1..n from the top; line j is bit (n - j) of a state
index. Gates apply left to right, so the permutation of a circuit has the
last gate outermost.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple, Union

import numpy as np

from rev_boolfn.truth_table import (
    BooleanFunctionError,
    ControlFunction,
    Permutation,
    TruthTable,
)
from rev_esop.expansion import expression_for

_logger = logging.getLogger(__name__)


class CircuitError(BooleanFunctionError):
    """Base exception for gate and circuit operations."""
    pass


class GateShapeError(CircuitError):
    pass


@dataclass(frozen=True)
class SingleTargetGate:
    """
    T_g(C, t): flip line `target` iff g evaluates to 1 on the control
    lines. Variable x_j of g is the j-th smallest control line.
    """

    target: int
    controls: Tuple[int, ...]
    g: ControlFunction

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(self.controls))
        if self.target < 1:
            raise GateShapeError(f"Target line {self.target} must be >= 1")
        if any(line < 1 for line in self.controls):
            raise GateShapeError(f"Control lines {self.controls} must all be >= 1")
        if list(self.controls) != sorted(set(self.controls)):
            raise GateShapeError(f"Controls {self.controls} must be strictly ascending")
        if self.target in self.controls:
            raise GateShapeError(f"Target line {self.target} is also a control")
        if self.g.n_outputs != 1:
            raise GateShapeError("Control function must have a single output")
        if self.g.n_inputs != len(self.controls):
            raise GateShapeError(
                f"Control function arity {self.g.n_inputs} does not match "
                f"{len(self.controls)} control lines"
            )

    @property
    def lines_used(self) -> Tuple[int, ...]:
        return self.controls + (self.target,)


@dataclass(frozen=True)
class MpmctGate:
    """Mixed-polarity multiple-control Toffoli gate (MCT when neg is empty)."""

    target: int
    pos: FrozenSet[int] = frozenset()
    neg: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "pos", frozenset(self.pos))
        object.__setattr__(self, "neg", frozenset(self.neg))
        if self.target < 1:
            raise GateShapeError(f"Target line {self.target} must be >= 1")
        if any(line < 1 for line in self.pos | self.neg):
            raise GateShapeError(f"Control lines {sorted(self.pos | self.neg)} must all be >= 1")
        if self.pos & self.neg:
            raise GateShapeError(f"Lines {sorted(self.pos & self.neg)} are both positive and negative controls")
        if self.target in self.pos or self.target in self.neg:
            raise GateShapeError(f"Target line {self.target} is also a control")

    @property
    def is_mct(self) -> bool:
        return not self.neg

    @property
    def controls(self) -> Tuple[int, ...]:
        return tuple(sorted(self.pos | self.neg))

    @property
    def lines_used(self) -> Tuple[int, ...]:
        return self.controls + (self.target,)


Gate = Union[SingleTargetGate, MpmctGate]


@dataclass(frozen=True)
class Circuit:
    lines: int
    gates: Tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.lines < 0:
            raise CircuitError(f"Line count must be non-negative, got {self.lines}")
        for position, gate in enumerate(self.gates, start=1):
            for line in gate.lines_used:
                if line < 1 or line > self.lines:
                    raise CircuitError(
                        f"Gate {position} uses line {line} but the circuit has {self.lines} lines"
                    )

    def __len__(self) -> int:
        return len(self.gates)


def _bit(state: int, line: int, lines: int) -> int:
    return (state >> (lines - line)) & 1


def gate_fires(gate: Gate, state: int, lines: int) -> bool:
    if isinstance(gate, SingleTargetGate):
        index = 0
        for line in gate.controls:
            index = (index << 1) | _bit(state, line, lines)
        return gate.g.rows[index] == 1
    for line in gate.pos:
        if not _bit(state, line, lines):
            return False
    for line in gate.neg:
        if _bit(state, line, lines):
            return False
    return True


def apply_gate(gate: Gate, state: int, lines: int) -> int:
    if gate_fires(gate, state, lines):
        return state ^ (1 << (lines - gate.target))
    return state


def simulate(c: Circuit, state: int) -> int:
    if state < 0 or state >= (1 << c.lines):
        raise CircuitError(f"Input {state} outside 0..{(1 << c.lines) - 1}")
    for gate in c.gates:
        state = apply_gate(gate, state, c.lines)
    return state


def _fire_vector(gate: Gate, states: np.ndarray, lines: int) -> np.ndarray:
    if isinstance(gate, SingleTargetGate):
        index = np.zeros_like(states)
        for line in gate.controls:
            index = (index << 1) | ((states >> (lines - line)) & 1)
        return gate.g.as_array()[index]
    fire = np.ones_like(states)
    for line in gate.pos:
        fire &= (states >> (lines - line)) & 1
    for line in gate.neg:
        fire &= 1 - ((states >> (lines - line)) & 1)
    return fire


def circuit_perm(c: Circuit) -> Permutation:
    """Permutation realized by c, simulating all 2^lines states at once."""
    states = np.arange(1 << c.lines, dtype=np.int64)
    for gate in c.gates:
        states = states ^ (_fire_vector(gate, states, c.lines) << (c.lines - gate.target))
    return Permutation(c.lines, tuple(states.tolist()))


def invert_circuit(c: Circuit) -> Circuit:
    # every gate is an involution
    return Circuit(c.lines, tuple(reversed(c.gates)))


def concat_circuits(a: Circuit, b: Circuit) -> Circuit:
    if a.lines != b.lines:
        raise CircuitError(f"Cannot concatenate circuits on {a.lines} and {b.lines} lines")
    return Circuit(a.lines, a.gates + b.gates)


def drop_constant_gates(c: Circuit) -> Circuit:
    kept = [
        gate for gate in c.gates
        if not (isinstance(gate, SingleTargetGate) and gate.g.is_constant(0))
    ]
    return Circuit(c.lines, tuple(kept))


def gate_to_stg(gate: Gate) -> SingleTargetGate:
    if isinstance(gate, SingleTargetGate):
        return gate
    controls = gate.controls
    rows = []
    for index in range(1 << len(controls)):
        fire = 1
        for j, line in enumerate(controls):
            value = (index >> (len(controls) - 1 - j)) & 1
            if (line in gate.pos and not value) or (line in gate.neg and value):
                fire = 0
                break
        rows.append(fire)
    return SingleTargetGate(gate.target, controls, TruthTable(len(controls), 1, tuple(rows)))


def stg_to_toffoli(gate: SingleTargetGate, method: str = "pprm") -> List[MpmctGate]:
    """
    One MPMCT gate per cube of the control function's expression ("pprm"
    or greedy "esop"). Controls absent from a cube are dropped from the
    emitted gate; the constant-1 cube becomes an uncontrolled NOT.
    """
    expression = expression_for(gate.g, method)
    mapped = []
    for cube in expression.cubes:
        pos = set()
        neg = set()
        for j, positive in cube.literals():
            line = gate.controls[j - 1]
            (pos if positive else neg).add(line)
        mapped.append(MpmctGate(gate.target, frozenset(pos), frozenset(neg)))
    return mapped


def map_circuit_to_toffoli(c: Circuit, method: str = "pprm") -> Circuit:
    gates: List[Gate] = []
    for gate in c.gates:
        if isinstance(gate, SingleTargetGate):
            gates.extend(stg_to_toffoli(gate, method))
        else:
            gates.append(gate)
    _logger.debug("Mapped %d gates to %d Toffoli gates (%s)", len(c.gates), len(gates), method)
    return Circuit(c.lines, tuple(gates))
