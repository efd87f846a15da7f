"""
Circuit Text Format

Parse and write ".rc" files:

  .lines N
  t [!]xA [!]xB ... xT          MCT / MPMCT gate, target last
  stg T : <esop> [with xA,xB]   single-target gate on line T

STG controls are the lines mentioned in the expression plus those listed
after "with". The expression "0" is the constant-0 control function.
Lines starting with '#' are comments.
"""

import logging
import re
from typing import Dict, Iterable, List, Optional, Set, Tuple

from rev_boolfn.truth_table import BooleanFunctionError
from rev_circuit.gates import (
    Circuit,
    CircuitError,
    Gate,
    MpmctGate,
    SingleTargetGate,
)
from rev_esop.cube import (
    EsopExpr,
    cube_from_literals,
    esop_to_table,
    format_esop,
    parse_esop_terms,
    support,
)
from rev_esop.expansion import pprm


_LINE_REF = re.compile(r"^(!?)x(\d+)$")
_WITH = re.compile(r"\s+with\s+")


class CircuitFormatError(CircuitError):
    """Malformed .rc text; carries the 1-based line number when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CircuitSyntaxError(CircuitFormatError):
    pass


class LineIndexOutOfRange(CircuitFormatError):
    pass


class DuplicateControl(CircuitFormatError):
    pass


def read_comments(lines: Iterable[str]) -> List[str]:
    """Text of the full-line comments, without the leading '#'."""
    return [
        line.strip()[1:].strip()
        for line in lines
        if line.strip().startswith("#")
    ]


class CircuitParser:
    """
    Parse circuits in the .rc format into Circuit values.
    """

    def __init__(self):
        self._logger = logging.getLogger(__name__)

    def parse_lines(self, lines: Iterable[str]) -> Circuit:
        n_lines: Optional[int] = None
        gates: List[Gate] = []

        for idx, raw_line in enumerate(lines, start=1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue

            if line.startswith("."):
                parts = line.split()
                if len(parts) != 2 or parts[0] != ".lines":
                    raise CircuitSyntaxError(f"unknown directive '{line}'", idx)
                if n_lines is not None:
                    raise CircuitSyntaxError("duplicate '.lines' header", idx)
                try:
                    n_lines = int(parts[1])
                except ValueError as exc:
                    raise CircuitSyntaxError(f"invalid line count '{parts[1]}'", idx) from exc
                if n_lines < 0:
                    raise CircuitSyntaxError("line count must be non-negative", idx)
                continue

            if n_lines is None:
                raise CircuitSyntaxError("gate before '.lines' header", idx)

            keyword = line.split(maxsplit=1)[0]
            if keyword == "t":
                gates.append(self._parse_toffoli(line, n_lines, idx))
            elif keyword == "stg":
                gates.append(self._parse_stg(line, n_lines, idx))
            else:
                raise CircuitSyntaxError(f"unknown gate '{keyword}'", idx)

        if n_lines is None:
            raise CircuitSyntaxError("missing '.lines' header")

        self._logger.debug("Parsed circuit with %d lines and %d gates", n_lines, len(gates))
        return Circuit(n_lines, tuple(gates))

    def parse_text(self, text: str) -> Circuit:
        return self.parse_lines(text.splitlines())

    def parse_file(self, filepath: str, encoding: str = "utf-8") -> Circuit:
        with open(filepath, "r", encoding=encoding) as handle:
            lines = handle.readlines()
        return self.parse_lines(lines)

    def _line_ref(self, token: str, n_lines: int, idx: int) -> Tuple[int, bool]:
        match = _LINE_REF.match(token)
        if not match:
            raise CircuitSyntaxError(f"invalid line reference '{token}'", idx)
        line = int(match.group(2))
        if line < 1 or line > n_lines:
            raise LineIndexOutOfRange(f"line x{line} outside 1..{n_lines}", idx)
        return line, match.group(1) != "!"

    def _parse_toffoli(self, line: str, n_lines: int, idx: int) -> MpmctGate:
        tokens = line.split()[1:]
        if not tokens:
            raise CircuitSyntaxError("gate 't' needs a target", idx)

        target, positive = self._line_ref(tokens[-1], n_lines, idx)
        if not positive:
            raise CircuitSyntaxError("target cannot be negated", idx)

        pos: Set[int] = set()
        neg: Set[int] = set()
        for token in tokens[:-1]:
            control, positive = self._line_ref(token, n_lines, idx)
            if control == target or control in pos or control in neg:
                raise DuplicateControl(f"line x{control} used twice in gate", idx)
            (pos if positive else neg).add(control)
        return MpmctGate(target, frozenset(pos), frozenset(neg))

    def _parse_stg(self, line: str, n_lines: int, idx: int) -> SingleTargetGate:
        head, sep, body = line[len("stg"):].partition(":")
        if not sep:
            raise CircuitSyntaxError("expected 'stg <target> : <expression>'", idx)
        target_text = head.strip()
        if target_text.startswith("x"):
            target_text = target_text[1:]
        try:
            target = int(target_text)
        except ValueError as exc:
            raise CircuitSyntaxError(f"invalid target '{head.strip()}'", idx) from exc
        if target < 1 or target > n_lines:
            raise LineIndexOutOfRange(f"target x{target} outside 1..{n_lines}", idx)

        parts = _WITH.split(body.strip())
        if len(parts) > 2:
            raise CircuitSyntaxError("more than one 'with' clause", idx)
        expression_text = parts[0]

        try:
            terms = parse_esop_terms(expression_text)
        except BooleanFunctionError as exc:
            raise CircuitSyntaxError(str(exc), idx) from exc

        controls: Set[int] = set()
        for literals in terms:
            for control, _ in literals:
                if control < 1 or control > n_lines:
                    raise LineIndexOutOfRange(f"line x{control} outside 1..{n_lines}", idx)
                controls.add(control)

        if len(parts) == 2:
            listed: Set[int] = set()
            for token in parts[1].split(","):
                control, positive = self._line_ref(token.strip(), n_lines, idx)
                if not positive or control in listed:
                    raise DuplicateControl(f"invalid extra control '{token.strip()}'", idx)
                listed.add(control)
            controls |= listed

        if target in controls:
            raise DuplicateControl(f"target x{target} also used as a control", idx)

        ordered = sorted(controls)
        position = {line_no: j for j, line_no in enumerate(ordered, start=1)}
        k = len(ordered)
        try:
            cubes = [
                cube_from_literals(k, [(position[c], positive) for c, positive in literals])
                for literals in terms
            ]
        except BooleanFunctionError as exc:
            raise CircuitSyntaxError(str(exc), idx) from exc

        g = esop_to_table(EsopExpr(k, tuple(cubes)))
        return SingleTargetGate(target, tuple(ordered), g)


def format_gate(gate: Gate) -> str:
    if isinstance(gate, MpmctGate):
        tokens = ["t"]
        for line in gate.controls:
            tokens.append(f"!x{line}" if line in gate.neg else f"x{line}")
        tokens.append(f"x{gate.target}")
        return " ".join(tokens)

    expression = pprm(gate.g)
    names: Dict[int, str] = {
        j: f"x{line}" for j, line in enumerate(gate.controls, start=1)
    }
    text = f"stg {gate.target} : {format_esop(expression, names)}"
    mentioned = {gate.controls[j - 1] for j in support(expression)}
    extra = [line for line in gate.controls if line not in mentioned]
    if extra:
        text += " with " + ",".join(f"x{line}" for line in extra)
    return text


def parse_circuit(text: str) -> Circuit:
    return CircuitParser().parse_text(text)


def serialize_circuit(c: Circuit, comments: Optional[List[str]] = None) -> str:
    """
    Canonical text: ascending controls, STG control functions written as
    their PPRM with cubes in ascending (care, polarity) order.
    """
    lines = [f"# {comment}" for comment in (comments or [])]
    lines.append(f".lines {c.lines}")
    lines.extend(format_gate(gate) for gate in c.gates)
    return "\n".join(lines) + "\n"


def write_circuit(c: Circuit, output_path: str, comments: Optional[List[str]] = None) -> None:
    with open(output_path, "w", encoding="utf-8") as handle:
        handle.write(serialize_circuit(c, comments))
