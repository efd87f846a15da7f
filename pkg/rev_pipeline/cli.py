#!/usr/bin/env python3
"""
Reversible logic workbench CLI: synthesis, verification, Toffoli mapping,
simulation, bounds, census and half-V embedding.

Exit status: 0 on success, 1 when a requested check is negative
(not-equal, not realizable, count mismatch), 2 on input or domain errors.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from rev_analysis.bounds import LIBRARIES, LIBRARY_MCT, bounds_table
from rev_analysis.census import DEFAULT_SAMPLES, ComplexityCensus, DISTRIBUTION_COLUMNS
from rev_boolfn.truth_table import (
    Permutation,
    SizeMismatch,
    first_difference,
    format_bits,
    perm_from_tt,
)
from rev_boolfn.tt_format import TruthTableParser, serialize_tt
from rev_circuit.gates import circuit_perm, map_circuit_to_toffoli, simulate
from rev_circuit.rc_format import CircuitParser, serialize_circuit, write_circuit
from rev_embedding.embed import conventional_line_count, embed_decode, embed_encode
from rev_embedding.halfv import (
    NotRealizable,
    halfv_enumerate,
    halfv_recognize,
    read_halfv,
    serialize_halfv,
    tuple_count,
)
from rev_synthesis.young import YoungSubgroupSynthesizer


EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

MAPPING_METHODS = ("pprm", "esop")


class CliUsageError(ValueError):
    pass


@dataclass
class CliConfig:
    """Parsed and validated command line."""

    command: str
    verbose: bool = False
    threads: int = 1
    inputs: List[str] = field(default_factory=list)
    out: Optional[str] = None
    order: Optional[Tuple[int, ...]] = None
    method: Optional[str] = None
    bits: Optional[str] = None
    n: Optional[int] = None
    k: Optional[int] = None
    n_max: int = 16
    library: str = LIBRARY_MCT
    exhaustive: bool = False
    samples: Optional[int] = None
    seed: int = 0
    csv: Optional[str] = None
    summary_csv: Optional[str] = None
    term_budgets: List[int] = field(default_factory=list)
    halfv_action: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        config = cls(command=args.command, verbose=args.verbose, threads=args.threads)
        for name in (
            "out", "method", "bits", "n", "k", "n_max", "library", "exhaustive",
            "samples", "seed", "csv", "summary_csv", "halfv_action",
        ):
            if hasattr(args, name) and getattr(args, name) is not None:
                setattr(config, name, getattr(args, name))
        if getattr(args, "term_budget", None):
            config.term_budgets = list(args.term_budget)
        if getattr(args, "to_toffoli", None):
            config.method = args.to_toffoli
        for name in ("input", "a", "b"):
            if getattr(args, name, None):
                config.inputs.append(getattr(args, name))
        if getattr(args, "order", None):
            config.order = parse_order(args.order)
        config.validate()
        return config

    def validate(self) -> None:
        if self.threads < 1:
            raise CliUsageError("--threads must be at least 1")
        if self.command == "census":
            if self.exhaustive and self.samples is not None:
                raise CliUsageError("--exhaustive and --samples are mutually exclusive")
            if self.samples is not None and self.samples < 1:
                raise CliUsageError("--samples must be positive")
        if self.command == "sim" and self.bits is not None:
            if any(ch not in "01" for ch in self.bits):
                raise CliUsageError(f"Input '{self.bits}' must be a 0/1 string")
        if self.command == "bounds" and self.n_max < 2:
            raise CliUsageError("--n-max must be at least 2")


def parse_order(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise CliUsageError(f"Invalid --order '{text}', expected e.g. 3,2,1") from exc


def load_permutation(path: str) -> Permutation:
    """Read a reversible function from a .tt truth table or a .rc circuit."""
    suffix = Path(path).suffix
    if suffix == ".tt":
        return perm_from_tt(TruthTableParser().parse_file(path))
    if suffix == ".rc":
        return circuit_perm(CircuitParser().parse_file(path))
    raise CliUsageError(f"Unknown file type '{path}', expected .tt or .rc")


def emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_synth(config: CliConfig) -> int:
    source = config.inputs[0]
    f = perm_from_tt(TruthTableParser().parse_file(source))
    synthesizer = YoungSubgroupSynthesizer(config.order)
    circuit = synthesizer.synthesize(f)
    print(f"{len(circuit)} gates")

    result = circuit
    if config.method:
        result = map_circuit_to_toffoli(circuit, config.method)
        print(f"{len(result)} toffoli gates")

    out = config.out or str(Path(source).with_suffix(".rc"))
    write_circuit(result, out, comments=[f"synthesized from {Path(source).name}"])
    logging.getLogger(__name__).info("Wrote %s", out)
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    p = load_permutation(config.inputs[0])
    q = load_permutation(config.inputs[1])
    if p.n != q.n:
        raise SizeMismatch(f"Line counts differ: {p.n} vs {q.n}")
    r = first_difference(p, q)
    if r is None:
        print("equal")
        return EXIT_OK
    print("not-equal")
    print(
        f"first difference: input {format_bits(r, p.n)} -> "
        f"{format_bits(p[r], p.n)} vs {format_bits(q[r], q.n)}"
    )
    return EXIT_NEGATIVE


def cmd_map(config: CliConfig) -> int:
    circuit = CircuitParser().parse_file(config.inputs[0])
    mapped = map_circuit_to_toffoli(circuit, config.method or "pprm")
    emit(serialize_circuit(mapped), config.out)
    if config.out:
        print(f"{len(mapped)} toffoli gates")
    return EXIT_OK


def cmd_sim(config: CliConfig) -> int:
    circuit = CircuitParser().parse_file(config.inputs[0])
    if len(config.bits) != circuit.lines:
        raise CliUsageError(
            f"Input '{config.bits}' has {len(config.bits)} bits, the circuit has {circuit.lines} lines"
        )
    state = int(config.bits, 2) if config.bits else 0
    print(format_bits(simulate(circuit, state), circuit.lines))
    return EXIT_OK


def cmd_bounds(config: CliConfig) -> int:
    table = bounds_table(config.n_max, config.library)
    if config.csv:
        table.to_csv(config.csv, index=False)
    shown = table.copy()
    for column in ("induction_ok", "induction_step_ok"):
        shown[column] = shown[column].map({True: "ok", False: "FAIL"})
    for column in ("one_gate_functions", "bfs_worst_case"):
        shown[column] = shown[column].astype(object).where(shown[column].notna(), "-")
    print(shown.to_string(index=False))
    return EXIT_OK


def cmd_census(config: CliConfig) -> int:
    census = ComplexityCensus(
        config.n,
        samples=config.samples or DEFAULT_SAMPLES,
        seed=config.seed,
        workers=config.threads,
        order=config.order,
        exhaustive=True if config.exhaustive else (False if config.samples else None),
    )
    result = census.run()
    if config.csv:
        result.to_csv(config.csv)
    if config.summary_csv:
        result.summary().to_csv(config.summary_csv, index=False)

    mode = "exhaustive" if result.exhaustive else f"sampled, seed {result.seed}"
    print(f"n={result.n} functions={result.size} ({mode})")
    for column in DISTRIBUTION_COLUMNS:
        print(f"\n{column}")
        print(result.distribution(column).to_string(index=False))
    for budget in config.term_budgets:
        print(f"\nwithin {budget} esop terms per gate: {result.within_term_budget(budget)}")
    print(f"\nequivalent: {result.equivalent_count}/{result.size}")
    print(f"within {2 * result.n - 1} gates: {result.within_gate_bound()}/{result.size}")
    if result.equivalent_count != result.size:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_halfv(config: CliConfig) -> int:
    action = config.halfv_action
    if action == "enumerate":
        count = halfv_enumerate(config.n, config.k, workers=config.threads)
        expected = tuple_count(config.n, config.k)
        if count == expected:
            print(f"{count} = {expected} ok")
            return EXIT_OK
        print(f"{count} != {expected} MISMATCH")
        return EXIT_NEGATIVE

    if action == "check":
        p = load_permutation(config.inputs[0])
        n = config.n if config.n is not None else p.n
        try:
            h = halfv_recognize(p, n)
        except NotRealizable as exc:
            print(str(exc))
            return EXIT_NEGATIVE
        print(f"realizable ({h.n} gates on {h.k} lines)")
        return EXIT_OK

    if action == "encode":
        f = TruthTableParser().parse_file(config.inputs[0])
        k = config.k if config.k is not None else f.n_inputs + 1
        h = embed_encode(f, k)
        emit(serialize_halfv(h), config.out)
        print(
            f"lines: {h.k} (conventional embedding: {conventional_line_count(f)})",
            file=sys.stderr,
        )
        return EXIT_OK

    # decode
    h = read_halfv(config.inputs[0])
    emit(serialize_tt(embed_decode(h)), config.out)
    return EXIT_OK


COMMANDS = {
    "synth": cmd_synth,
    "verify": cmd_verify,
    "map": cmd_map,
    "sim": cmd_sim,
    "bounds": cmd_bounds,
    "census": cmd_census,
    "halfv": cmd_halfv,
}


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revsynth",
        description="Reversible logic synthesis workbench",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m rev_pipeline.cli synth data/swap3.tt --to-toffoli esop --out swap3.rc
  python -m rev_pipeline.cli verify swap3.rc data/swap3.tt
  python -m rev_pipeline.cli bounds --n-max 16
  python -m rev_pipeline.cli census --n 4 --samples 1000 --seed 7 --csv census.csv
  python -m rev_pipeline.cli halfv enumerate --n 3 --k 3

Census CSV columns: function_index, stg_count, max_pprm_terms, max_esop_terms,
toffoli_count_pprm, toffoli_count_esop, equivalent. Summary CSV columns: metric, value, count.
Bounds CSV columns: n, lower_bound, exact, induction_ok, induction_step_ok,
one_gate_functions (n <= 6), bfs_worst_case (n <= 3; empty beyond).
        """,
    )
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr")
    parser.add_argument("--threads", type=int, default=1, help="Worker processes for census/enumeration")

    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("synth", help="Synthesize a reversible .tt into a V-shaped circuit")
    s.add_argument("input", help="Reversible truth table (.tt)")
    s.add_argument("--order", help="Variable order, e.g. 3,2,1 (default 1..n)")
    s.add_argument("--to-toffoli", choices=MAPPING_METHODS, help="Map gates to Toffoli gates")
    s.add_argument("--out", help="Output circuit (.rc); default <input>.rc")

    s = sub.add_parser("verify", help="Check two functions for equality")
    s.add_argument("a", help=".tt or .rc file")
    s.add_argument("b", help=".tt or .rc file")

    s = sub.add_parser("map", help="Map single-target gates to Toffoli gates")
    s.add_argument("input", help="Circuit (.rc)")
    s.add_argument("--method", choices=MAPPING_METHODS, default="pprm")
    s.add_argument("--out", help="Output circuit (.rc); default stdout")

    s = sub.add_parser("sim", help="Simulate a circuit on one input")
    s.add_argument("input", help="Circuit (.rc)")
    s.add_argument("bits", help="Input bits, line 1 first")

    s = sub.add_parser("bounds", help="Counting lower bounds and growth checks")
    s.add_argument("--n-max", type=int, default=16)
    s.add_argument("--library", choices=LIBRARIES, default=LIBRARY_MCT)
    s.add_argument("--csv", help="Write the table as CSV")

    s = sub.add_parser("census", help="Complexity census of synthesized circuits")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--exhaustive", action="store_true", help="All functions (n <= 3)")
    s.add_argument("--samples", type=int, help=f"Random sample size (default {DEFAULT_SAMPLES})")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--order", help="Variable order for synthesis")
    s.add_argument("--csv", help="Per-function rows as CSV")
    s.add_argument("--summary-csv", help="Distribution tables as CSV")
    s.add_argument("--term-budget", type=int, action="append", help="Count functions within t ESOP terms per gate")

    s = sub.add_parser("halfv", help="Half-V circuits and the line-optimal embedding")
    halfv = s.add_subparsers(dest="halfv_action", required=True)

    h = halfv.add_parser("check", help="Recognize a half-V circuit")
    h.add_argument("input", help="Reversible function (.tt or .rc)")
    h.add_argument("--n", type=int, help="Gate count (default: line count)")

    h = halfv.add_parser("encode", help="Embed a multiple-output function")
    h.add_argument("input", help="Function in B_{k-1,n} (.tt)")
    h.add_argument("--k", type=int, help="Line count (default: inputs + 1)")
    h.add_argument("--out", help="Output half-V circuit (.rc); default stdout")

    h = halfv.add_parser("decode", help="Read the embedded function back")
    h.add_argument("input", help="Half-V circuit (.rc)")
    h.add_argument("--out", help="Output truth table (.tt); default stdout")

    h = halfv.add_parser("enumerate", help="Count half-V realizable functions")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--k", type=int, required=True)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )

    try:
        config = CliConfig.from_args(args)
        return COMMANDS[config.command](config)
    except (ValueError, OSError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
