"""
Boolean multiple-output functions and reversible permutations.

Bit convention used by every package in this repository: variable x1 is
circuit line 1 (the top line) and the MOST significant bit of a state
index; xn is the least significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np


MAX_VARIABLES = 20


class BooleanFunctionError(ValueError):
    """Base exception for truth table and permutation operations."""
    pass


class LengthMismatch(BooleanFunctionError):
    pass


class OutputOverflow(BooleanFunctionError):
    pass


class IndexOutOfRange(BooleanFunctionError):
    pass


class BadVariable(BooleanFunctionError):
    pass


class NotReversible(BooleanFunctionError):
    pass


class SizeMismatch(BooleanFunctionError):
    pass


class TooManyVariables(BooleanFunctionError):
    pass


def var_shift(n: int, i: int) -> int:
    """Bit position of variable x_i inside an n-variable state index."""
    if i < 1 or i > n:
        raise BadVariable(f"Variable x{i} out of range for {n} variables")
    return n - i


def _check_width(n: int, what: str) -> None:
    if n < 0:
        raise BooleanFunctionError(f"{what} must be non-negative, got {n}")
    if n > MAX_VARIABLES:
        raise TooManyVariables(
            f"{what}={n} exceeds the supported maximum of {MAX_VARIABLES}"
        )


@dataclass(frozen=True)
class TruthTable:
    """
    Explicit value table of f in B_{n,m}.

    rows[r] holds the m output bits for input pattern r; f_1 is the most
    significant bit of the output word.
    """

    n_inputs: int
    n_outputs: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        _check_width(self.n_inputs, "n_inputs")
        _check_width(self.n_outputs, "n_outputs")
        if self.n_outputs < 1:
            raise BooleanFunctionError("n_outputs must be at least 1")
        object.__setattr__(self, "rows", tuple(int(word) for word in self.rows))

        expected = 1 << self.n_inputs
        if len(self.rows) != expected:
            raise LengthMismatch(
                f"Expected {expected} rows for {self.n_inputs} inputs, got {len(self.rows)}"
            )
        limit = 1 << self.n_outputs
        for r, word in enumerate(self.rows):
            if word < 0 or word >= limit:
                raise OutputOverflow(
                    f"Row {r} value {word} does not fit in {self.n_outputs} output bits"
                )

    @property
    def size(self) -> int:
        return len(self.rows)

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def as_bitmask(self) -> int:
        """Pack a single-output table into an int whose bit r is f(r)."""
        if self.n_outputs != 1:
            raise BooleanFunctionError("as_bitmask requires a single-output table")
        mask = 0
        for r, bit in enumerate(self.rows):
            if bit:
                mask |= 1 << r
        return mask

    def is_constant(self, value: Optional[int] = None) -> bool:
        first = self.rows[0]
        if value is not None and first != value:
            return False
        return all(word == first for word in self.rows)


# A control function is a single-output table; its arity is n_inputs.
ControlFunction = TruthTable


@dataclass(frozen=True)
class Permutation:
    """
    Reversible function on n lines as a bijection on state indices.
    """

    n: int
    map: Tuple[int, ...]

    def __post_init__(self):
        _check_width(self.n, "n")
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        size = 1 << self.n
        if len(self.map) != size:
            raise LengthMismatch(
                f"Permutation on {self.n} lines needs {size} entries, got {len(self.map)}"
            )
        seen = bytearray(size)
        for r, image in enumerate(self.map):
            if image < 0 or image >= size:
                raise NotReversible(f"Image {image} of {r} is outside 0..{size - 1}")
            if seen[image]:
                raise NotReversible(f"Image {image} appears more than once")
            seen[image] = 1

    def __getitem__(self, r: int) -> int:
        return self.map[r]

    def __len__(self) -> int:
        return len(self.map)

    def is_identity(self) -> bool:
        return all(image == r for r, image in enumerate(self.map))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Cycle decomposition without fixed points, smallest element first."""
        visited = [False] * len(self.map)
        result = []
        for start in range(len(self.map)):
            if visited[start]:
                continue
            cycle = []
            current = start
            while not visited[current]:
                visited[current] = True
                cycle.append(current)
                current = self.map[current]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result


def tt_from_rows(n_inputs: int, n_outputs: int, rows: Sequence[int]) -> TruthTable:
    return TruthTable(n_inputs, n_outputs, tuple(rows))


def tt_from_bitmask(n_inputs: int, mask: int) -> TruthTable:
    return TruthTable(n_inputs, 1, tuple((mask >> r) & 1 for r in range(1 << n_inputs)))


def tt_constant(n_inputs: int, value: int, n_outputs: int = 1) -> TruthTable:
    return TruthTable(n_inputs, n_outputs, (value,) * (1 << n_inputs))


def tt_variable(n_inputs: int, i: int, positive: bool = True) -> TruthTable:
    """Projection table of literal x_i (or its negation) over n_inputs variables."""
    shift = var_shift(n_inputs, i)
    flip = 0 if positive else 1
    return TruthTable(
        n_inputs, 1, tuple(((r >> shift) & 1) ^ flip for r in range(1 << n_inputs))
    )


def evaluate(f: TruthTable, state: int) -> int:
    if state < 0 or state >= f.size:
        raise IndexOutOfRange(f"Input {state} outside 0..{f.size - 1}")
    return f.rows[state]


def output_component(f: TruthTable, i: int) -> TruthTable:
    """The single-output table f_i (f_1 is the leftmost .tt column)."""
    shift = var_shift(f.n_outputs, i)
    return TruthTable(f.n_inputs, 1, tuple((word >> shift) & 1 for word in f.rows))


def cofactor(f: TruthTable, i: int, value: int) -> TruthTable:
    """
    Fix variable x_i to value and return the table over the remaining
    n-1 variables, kept in their original order.

    Raises:
        BadVariable: If i is not in 1..n
    """
    shift = var_shift(f.n_inputs, i)
    if value not in (0, 1):
        raise BooleanFunctionError(f"Cofactor value must be 0 or 1, got {value}")

    rest = np.arange(1 << (f.n_inputs - 1), dtype=np.int64)
    low = rest & ((1 << shift) - 1)
    full = ((rest >> shift) << (shift + 1)) | (value << shift) | low
    rows = f.as_array()[full]
    return TruthTable(f.n_inputs - 1, f.n_outputs, tuple(rows.tolist()))


def is_reversible(f: TruthTable) -> bool:
    if f.n_inputs != f.n_outputs:
        return False
    return len(set(f.rows)) == len(f.rows)


def perm_from_tt(f: TruthTable) -> Permutation:
    if not is_reversible(f):
        raise NotReversible(
            f"Function with {f.n_inputs} inputs and {f.n_outputs} outputs is not reversible"
        )
    return Permutation(f.n_inputs, f.rows)


def tt_from_perm(p: Permutation) -> TruthTable:
    return TruthTable(p.n, p.n, p.map)


def identity_perm(n: int) -> Permutation:
    return Permutation(n, tuple(range(1 << n)))


def random_perm(n: int, rng: np.random.Generator) -> Permutation:
    return Permutation(n, tuple(rng.permutation(1 << n).tolist()))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """compose(p, q)[r] = p[q[r]], i.e. q is applied first."""
    if p.n != q.n:
        raise SizeMismatch(f"Cannot compose permutations on {p.n} and {q.n} lines")
    pm = p.map
    return Permutation(p.n, tuple(pm[image] for image in q.map))


def compose_all(perms: Iterable[Permutation], n: int) -> Permutation:
    """Apply perms left to right: the first element acts first."""
    result = identity_perm(n)
    for p in perms:
        result = compose(p, result)
    return result


def invert(p: Permutation) -> Permutation:
    inverse = [0] * len(p.map)
    for r, image in enumerate(p.map):
        inverse[image] = r
    return Permutation(p.n, tuple(inverse))


def first_difference(p: Permutation, q: Permutation) -> Optional[int]:
    """Smallest input on which p and q disagree, or None if they are equal."""
    if p.n != q.n:
        raise SizeMismatch(f"Cannot compare permutations on {p.n} and {q.n} lines")
    for r, (a, b) in enumerate(zip(p.map, q.map)):
        if a != b:
            return r
    return None


def format_bits(value: int, width: int) -> str:
    if width == 0:
        return ""
    return format(value, f"0{width}b")
