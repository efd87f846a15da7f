"""
Cubes and ESOP expressions.

A cube over n variables is a pair of bit masks in the state-index
convention (x1 is the most significant bit): `care` marks the variables
that appear, `polarity` marks the ones that appear as positive literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from rev_boolfn.truth_table import BooleanFunctionError, TruthTable, var_shift


class EsopError(BooleanFunctionError):
    """Base exception for ESOP operations."""
    pass


class EsopSyntaxError(EsopError):
    pass


_LITERAL = re.compile(r"^(!?)x(\d+)$")

# (variable index, positive?) pairs of one product term
Literals = List[Tuple[int, bool]]


@dataclass(frozen=True, order=True)
class Cube:
    n_vars: int
    care: int
    polarity: int

    def __post_init__(self):
        full = (1 << self.n_vars) - 1
        if self.care & ~full or self.polarity & ~full:
            raise EsopError(f"Cube masks exceed {self.n_vars} variables")
        if self.polarity & ~self.care:
            raise EsopError("Cube polarity must be a subset of its care mask")

    def evaluate(self, assignment: int) -> int:
        return 1 if (assignment & self.care) == self.polarity else 0

    def literals(self) -> Literals:
        """Literals in ascending variable order."""
        result = []
        for i in range(1, self.n_vars + 1):
            bit = 1 << var_shift(self.n_vars, i)
            if self.care & bit:
                result.append((i, bool(self.polarity & bit)))
        return result

    @property
    def is_positive(self) -> bool:
        return self.care == self.polarity


@dataclass(frozen=True)
class EsopExpr:
    n_vars: int
    cubes: Tuple[Cube, ...]

    def __post_init__(self):
        object.__setattr__(self, "cubes", tuple(self.cubes))
        for cube in self.cubes:
            if cube.n_vars != self.n_vars:
                raise EsopError(
                    f"Cube over {cube.n_vars} variables in expression over {self.n_vars}"
                )

    def canonical(self) -> "EsopExpr":
        """Same expression with cubes in ascending (care, polarity) order."""
        return EsopExpr(
            self.n_vars, tuple(sorted(self.cubes, key=lambda c: (c.care, c.polarity)))
        )


def eval_esop(e: EsopExpr, assignment: int) -> int:
    value = 0
    for cube in e.cubes:
        value ^= cube.evaluate(assignment)
    return value


def term_count(e: EsopExpr) -> int:
    return len(e.cubes)


def literal_count(e: EsopExpr) -> int:
    return sum(bin(cube.care).count("1") for cube in e.cubes)


def esop_to_table(e: EsopExpr) -> TruthTable:
    return TruthTable(e.n_vars, 1, tuple(eval_esop(e, r) for r in range(1 << e.n_vars)))


def cube_from_literals(n_vars: int, literals: Literals) -> Cube:
    care = 0
    polarity = 0
    for index, positive in literals:
        bit = 1 << var_shift(n_vars, index)
        if care & bit and bool(polarity & bit) != positive:
            raise EsopSyntaxError(f"Contradictory literals on x{index}")
        care |= bit
        if positive:
            polarity |= bit
    return Cube(n_vars, care, polarity)


def parse_cube_literals(text: str) -> Literals:
    """Parse one cube ("x1&!x2", or "1" for the constant-1 term)."""
    token = text.strip()
    if token == "1":
        return []
    literals: Literals = []
    for part in token.split("&"):
        match = _LITERAL.match(part.strip())
        if not match:
            raise EsopSyntaxError(f"Invalid literal '{part.strip()}'")
        literals.append((int(match.group(2)), match.group(1) != "!"))
    return literals


def parse_esop_terms(text: str) -> List[Literals]:
    """
    Parse an expression ("x1&!x2 ^ x3") into raw literal lists.

    "0" denotes the empty expression.
    """
    body = text.strip()
    if not body:
        raise EsopSyntaxError("Empty expression (write 0 for the constant-0 function)")
    if body == "0":
        return []
    return [parse_cube_literals(term) for term in body.split("^")]


def parse_esop(text: str, n_vars: int) -> EsopExpr:
    try:
        cubes = [cube_from_literals(n_vars, lits) for lits in parse_esop_terms(text)]
    except BooleanFunctionError as exc:
        raise EsopSyntaxError(f"Invalid expression '{text.strip()}': {exc}") from exc
    return EsopExpr(n_vars, tuple(cubes))


def format_cube(cube: Cube, names: Optional[Dict[int, str]] = None) -> str:
    literals = cube.literals()
    if not literals:
        return "1"
    parts = []
    for index, positive in literals:
        name = names[index] if names else f"x{index}"
        parts.append(name if positive else f"!{name}")
    return "&".join(parts)


def format_esop(e: EsopExpr, names: Optional[Dict[int, str]] = None) -> str:
    """
    Canonical text of an expression: cubes in ascending (care, polarity)
    order joined by " ^ "; the empty expression prints as "0".
    """
    canonical = e.canonical()
    if not canonical.cubes:
        return "0"
    return " ^ ".join(format_cube(cube, names) for cube in canonical.cubes)


def support(e: EsopExpr) -> Sequence[int]:
    """Variables that appear in at least one cube, ascending."""
    care = 0
    for cube in e.cubes:
        care |= cube.care
    return [i for i in range(1, e.n_vars + 1) if care & (1 << var_shift(e.n_vars, i))]
