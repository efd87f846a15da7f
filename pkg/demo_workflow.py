#!/usr/bin/env python3
"""
Complete Demo: Truth Table -> V-shaped Circuit -> Toffoli Gates -> Embedding

This script demonstrates a complete workflow:
1. Load a reversible function from data/
2. Decompose it into single-target gates (one pass per variable)
3. Map every gate to multiple-polarity Toffoli gates
4. Verify the circuits against the function
5. Compare against the counting lower bound
6. Embed an irreversible function into a half-V circuit

Key Features:
- Every circuit is checked by simulation, not trusted
- PPRM and greedy ESOP mappings are compared side by side
- The embedding uses only k = inputs + 1 lines
"""

from pathlib import Path

from rev_analysis.bounds import lower_bound_toffoli
from rev_boolfn.truth_table import perm_from_tt
from rev_boolfn.tt_format import TruthTableParser, serialize_tt
from rev_circuit.gates import circuit_perm, map_circuit_to_toffoli
from rev_circuit.rc_format import serialize_circuit
from rev_embedding.embed import conventional_line_count, embed_decode, embed_encode
from rev_embedding.halfv import halfv_recognize, halfv_to_circuit
from rev_esop.expansion import expression_for
from rev_esop.cube import format_esop
from rev_synthesis.young import YoungSubgroupSynthesizer

DATA_DIR = Path(__file__).parent / "data"


def load_function(name):
    """Read a reversible truth table from data/."""
    print("1. Loading Reversible Function")
    print("-" * 60)
    table = TruthTableParser().parse_file(str(DATA_DIR / name))
    f = perm_from_tt(table)
    print(f"   {name}: {f.n} lines")
    print(f"   Images: {list(f.map)}")
    print(f"   Cycles: {f.cycles()}")
    return f


def synthesize(f):
    print("\n2. Young Subgroup Decomposition")
    print("-" * 60)
    synthesizer = YoungSubgroupSynthesizer()
    for step in synthesizer.decompose_all(f):
        print(f"   x{step.var}: g1={list(step.g1.rows)} g2={list(step.g2.rows)}")
    circuit = synthesizer.synthesize(f)
    print(f"   {len(circuit)} single-target gates (at most {2 * f.n - 1})")
    for gate in circuit.gates:
        expr = format_esop(expression_for(gate.g, "esop"))
        print(f"     target {gate.target} <- {expr}")
    return circuit


def map_to_toffoli(circuit):
    print("\n3. Toffoli Mapping")
    print("-" * 60)
    mapped = {}
    for method in ("pprm", "esop"):
        mapped[method] = map_circuit_to_toffoli(circuit, method)
        print(f"   {method}: {len(mapped[method])} gates")
    print("\n   ESOP circuit:")
    for line in serialize_circuit(mapped["esop"]).splitlines():
        print(f"     {line}")
    return mapped


def verify(f, circuit, mapped):
    print("\n4. Verification")
    print("-" * 60)
    checks = [("single-target", circuit)] + list(mapped.items())
    for name, c in checks:
        status = "equal" if circuit_perm(c) == f else "NOT EQUAL"
        print(f"   {name}: {status}")


def compare_bound(f, mapped):
    print("\n5. Counting Lower Bound")
    print("-" * 60)
    report = lower_bound_toffoli(f.n)
    print(f"   Some {f.n}-line function needs at least {report.lower_bound} Toffoli gates")
    print(f"   This one used {min(len(c) for c in mapped.values())}")


def embed(name):
    print("\n6. Half-V Embedding")
    print("-" * 60)
    table = TruthTableParser().parse_file(str(DATA_DIR / name))
    k = table.n_inputs + 1
    h = embed_encode(table, k)
    p = circuit_perm(halfv_to_circuit(h))
    print(f"   {name}: {table.n_inputs} inputs, {table.n_outputs} outputs")
    print(f"   Half-V lines: {k} (conventional: {conventional_line_count(table)})")
    print(f"   Recognized back: {halfv_recognize(p, h.n) == h}")
    print("   Decoded table:")
    for line in serialize_tt(embed_decode(h)).splitlines():
        print(f"     {line}")


def main():
    print("=" * 60)
    print("REVERSIBLE SYNTHESIS - COMPLETE DEMO")
    print("=" * 60)

    f = load_function("swap3.tt")
    circuit = synthesize(f)
    mapped = map_to_toffoli(circuit)
    verify(f, circuit, mapped)
    compare_bound(f, mapped)
    embed("half_adder.tt")

    print("\n" + "=" * 60)
    print("Demo Complete!")
    print("=" * 60)

    print("\nNext Steps:")
    print("1. Try other variable orders with --order")
    print("2. Run a census: python -m rev_pipeline.cli census --n 3 --exhaustive")
    print("3. Reproduce the bound table: scripts/reproduce_bounds.sh")


if __name__ == "__main__":
    main()
