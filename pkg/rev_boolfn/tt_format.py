"""
Truth Table Text Format

Parse and write ".tt" files:

  .i N
  .o M
  <2^N lines of M characters 0/1, ascending input order, f1..fM left to right>

Lines starting with '#' are comments.
"""

import logging
from typing import Iterable, List, Optional

from rev_boolfn.truth_table import (
    BooleanFunctionError,
    TruthTable,
    format_bits,
)


class TruthTableFormatError(BooleanFunctionError):
    """Malformed .tt text; carries the 1-based line number when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TruthTableParser:
    """
    Parse lines in the format:
      .i <inputs>
      .o <outputs>
      <output bits>
    """

    def __init__(self):
        self._logger = logging.getLogger(__name__)

    def parse_lines(self, lines: Iterable[str]) -> TruthTable:
        n_inputs: Optional[int] = None
        n_outputs: Optional[int] = None
        rows: List[int] = []

        for idx, raw_line in enumerate(lines, start=1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue

            if line.startswith("."):
                parts = line.split()
                if len(parts) != 2 or parts[0] not in (".i", ".o"):
                    raise TruthTableFormatError(f"unknown directive '{line}'", idx)
                if rows:
                    raise TruthTableFormatError("header after data lines", idx)
                try:
                    value = int(parts[1])
                except ValueError as exc:
                    raise TruthTableFormatError(f"invalid count '{parts[1]}'", idx) from exc
                if (n_inputs if parts[0] == ".i" else n_outputs) is not None:
                    raise TruthTableFormatError(f"duplicate header '{parts[0]}'", idx)
                if parts[0] == ".i":
                    n_inputs = value
                else:
                    n_outputs = value
                continue

            if n_inputs is None or n_outputs is None:
                raise TruthTableFormatError("data line before '.i' and '.o' headers", idx)
            if len(line) != n_outputs or any(ch not in "01" for ch in line):
                raise TruthTableFormatError(
                    f"expected {n_outputs} characters of 0/1, got '{line}'", idx
                )
            rows.append(int(line, 2))

        if n_inputs is None or n_outputs is None:
            raise TruthTableFormatError("missing '.i' or '.o' header")

        try:
            table = TruthTable(n_inputs, n_outputs, tuple(rows))
        except BooleanFunctionError as exc:
            raise TruthTableFormatError(str(exc)) from exc

        self._logger.debug("Parsed truth table with %d inputs, %d outputs", n_inputs, n_outputs)
        return table

    def parse_text(self, text: str) -> TruthTable:
        return self.parse_lines(text.splitlines())

    def parse_file(self, filepath: str, encoding: str = "utf-8") -> TruthTable:
        with open(filepath, "r", encoding=encoding) as handle:
            lines = handle.readlines()
        return self.parse_lines(lines)


def serialize_tt(f: TruthTable, comments: Optional[List[str]] = None) -> str:
    lines = [f"# {comment}" for comment in (comments or [])]
    lines.append(f".i {f.n_inputs}")
    lines.append(f".o {f.n_outputs}")
    lines.extend(format_bits(word, f.n_outputs) for word in f.rows)
    return "\n".join(lines) + "\n"


def write_tt(f: TruthTable, output_path: str, comments: Optional[List[str]] = None) -> None:
    with open(output_path, "w", encoding="utf-8") as handle:
        handle.write(serialize_tt(f, comments))
