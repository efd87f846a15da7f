#!/usr/bin/env python3
"""
Complete workflow test: truth table file to Toffoli circuit and back.
"""

import tempfile
from pathlib import Path

import numpy as np

def test_complete_workflow():
    """Test complete workflow from a .tt file to a verified .rc file."""
    print("Testing Complete Synthesis Workflow")
    print("=" * 60)

    # 1. Write a random reversible function to disk
    print("\n1. Writing a random 4-line function...")
    from rev_boolfn.truth_table import perm_from_tt, random_perm, tt_from_perm
    from rev_boolfn.tt_format import TruthTableParser, write_tt

    f = random_perm(4, np.random.default_rng(2024))

    with tempfile.TemporaryDirectory() as tmpdir:
        tt_file = Path(tmpdir) / "f.tt"
        write_tt(tt_from_perm(f), str(tt_file), comments=["workflow test"])
        loaded = perm_from_tt(TruthTableParser().parse_file(str(tt_file)))
        assert loaded == f
        print(f"   Wrote {tt_file.name}: {len(f)} rows")

        # 2. Synthesize
        print("\n2. Synthesizing single-target gates...")
        from rev_synthesis.young import YoungSubgroupSynthesizer
        circuit = YoungSubgroupSynthesizer(order=(4, 2, 3, 1)).synthesize(loaded)
        print(f"   {len(circuit)} gates")
        assert len(circuit) <= 7

        # 3. Map to Toffoli gates and write both circuits
        print("\n3. Mapping to Toffoli gates...")
        from rev_circuit.gates import circuit_perm, map_circuit_to_toffoli
        from rev_circuit.rc_format import CircuitParser, write_circuit

        paths = {"stg": Path(tmpdir) / "f_stg.rc"}
        write_circuit(circuit, str(paths["stg"]))
        for method in ("pprm", "esop"):
            mapped = map_circuit_to_toffoli(circuit, method)
            paths[method] = Path(tmpdir) / f"f_{method}.rc"
            write_circuit(mapped, str(paths[method]))
            print(f"   {method}: {len(mapped)} Toffoli gates")

        # 4. Read circuits back and verify
        print("\n4. Verifying written circuits...")
        parser = CircuitParser()
        for name, path in paths.items():
            assert circuit_perm(parser.parse_file(str(path))) == f
            print(f"   ✓ {name}: equal")

    # 5. Embed the first two outputs with one extra line
    print("\n5. Embedding an irreversible projection...")
    from rev_boolfn.truth_table import TruthTable
    from rev_embedding.embed import embed_decode, embed_encode, embed_interpret
    from rev_embedding.halfv import halfv_to_circuit

    projection = TruthTable(3, 2, tuple(f[r] >> 2 for r in range(8)))
    h = embed_encode(projection, 4)
    p = circuit_perm(halfv_to_circuit(h))
    assert embed_decode(h) == projection
    assert embed_interpret(p, 2) == projection
    print(f"   {projection.n_inputs} inputs, {projection.n_outputs} outputs on {h.k} lines")

    print("\n" + "=" * 60)
    print("✓ Complete workflow successful!")
    print("=" * 60)

    print("\nKey Points:")
    print("- Every single-target gate touches exactly one line")
    print("- PPRM and ESOP mappings realize the same permutation")
    print("- Half-V embedding needs only one line more than the inputs")

if __name__ == "__main__":
    test_complete_workflow()
