#!/usr/bin/env python3
"""
Tests for the revsynth command line.
"""

import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

import pandas as pd

from rev_boolfn.truth_table import TruthTable, identity_perm, tt_from_perm
from rev_boolfn.tt_format import serialize_tt, write_tt
from rev_circuit.rc_format import CircuitParser
from rev_pipeline.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, main


TOFFOLI_RC = ".lines 3\nt x1 x2 x3\n"
OR_STG_RC = ".lines 3\nstg 3 : x1 ^ x2 ^ x1&x2\n"


class TestCli(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def path(self, name):
        return os.path.join(self.temp_dir, name)

    def write(self, name, text):
        path = self.path(name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        return path

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_synth_identity(self):
        source = self.path("identity3.tt")
        write_tt(tt_from_perm(identity_perm(3)), source)
        code, out, _ = self.run_cli("synth", source)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("0 gates", out)
        circuit = CircuitParser().parse_file(self.path("identity3.rc"))
        self.assertEqual(circuit.lines, 3)
        self.assertEqual(circuit.gates, ())

    def test_synth_to_toffoli_and_verify(self):
        source = self.write("swap2.tt", ".i 2\n.o 2\n00\n10\n01\n11\n")
        target = self.path("swap2.rc")
        code, out, _ = self.run_cli("synth", source, "--to-toffoli", "esop", "--out", target)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("toffoli gates", out)
        code, out, _ = self.run_cli("verify", target, source)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "equal")

    def test_synth_rejects_irreversible(self):
        source = self.write("and.tt", ".i 2\n.o 1\n0\n0\n0\n1\n")
        code, _, err = self.run_cli("synth", source)
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("not reversible", err)

    def test_synth_bad_order(self):
        source = self.write("swap2.tt", ".i 2\n.o 2\n00\n10\n01\n11\n")
        code, _, err = self.run_cli("synth", source, "--order", "1,x")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("--order", err)

    def test_verify_not_equal(self):
        source = self.path("identity3.tt")
        write_tt(tt_from_perm(identity_perm(3)), source)
        circuit = self.write("toffoli.rc", TOFFOLI_RC)
        code, out, _ = self.run_cli("verify", source, circuit)
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertIn("not-equal", out)
        self.assertIn("first difference: input 110 -> 110 vs 111", out)

    def test_sim(self):
        circuit = self.write("toffoli.rc", TOFFOLI_RC)
        code, out, _ = self.run_cli("sim", circuit, "110")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "111")
        code, _, err = self.run_cli("sim", circuit, "11")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("3 lines", err)
        code, _, _ = self.run_cli("sim", circuit, "1a0")
        self.assertEqual(code, EXIT_ERROR)

    def test_map(self):
        circuit = self.write("or.rc", OR_STG_RC)
        target = self.path("or_mct.rc")
        code, out, _ = self.run_cli("map", circuit, "--method", "esop", "--out", target)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("2 toffoli gates", out)
        code, _, _ = self.run_cli("verify", circuit, target)
        self.assertEqual(code, EXIT_OK)

        code, out, _ = self.run_cli("map", circuit)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(CircuitParser().parse_text(out).gates), 3)

    def test_bounds(self):
        csv_path = self.path("bounds.csv")
        code, out, _ = self.run_cli("bounds", "--n-max", "3", "--csv", csv_path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("ok", out)
        self.assertNotIn("FAIL", out)
        table = pd.read_csv(csv_path)
        self.assertEqual(table["n"].tolist(), [2, 3])
        self.assertEqual(table["lower_bound"].tolist(), [3, 5])
        self.assertEqual(table["one_gate_functions"].tolist(), [4, 12])
        self.assertEqual(table["bfs_worst_case"].tolist()[0], 3)
        self.assertIn("bfs_worst_case", out)

        code, _, _ = self.run_cli("bounds", "--n-max", "1")
        self.assertEqual(code, EXIT_ERROR)

    def test_census(self):
        csv_path = self.path("census.csv")
        summary_path = self.path("summary.csv")
        code, out, _ = self.run_cli(
            "census", "--n", "2", "--csv", csv_path, "--summary-csv", summary_path,
            "--term-budget", "2",
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("n=2 functions=24 (exhaustive)", out)
        self.assertIn("within 2 esop terms per gate: 24", out)
        self.assertIn("equivalent: 24/24", out)
        self.assertIn("within 3 gates: 24/24", out)
        self.assertTrue(pd.read_csv(csv_path)["equivalent"].all())
        self.assertEqual(len(pd.read_csv(csv_path)), 24)
        self.assertEqual(list(pd.read_csv(summary_path).columns), ["metric", "value", "count"])

    def test_census_options_conflict(self):
        code, _, err = self.run_cli("census", "--n", "2", "--exhaustive", "--samples", "5")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("mutually exclusive", err)

    def test_halfv_enumerate(self):
        code, out, _ = self.run_cli("halfv", "enumerate", "--n", "2", "--k", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "16 = 16 ok")
        code, _, _ = self.run_cli("halfv", "enumerate", "--n", "4", "--k", "5")
        self.assertEqual(code, EXIT_ERROR)

    def test_halfv_check(self):
        swap = self.write("swap2.tt", ".i 2\n.o 2\n00\n10\n01\n11\n")
        code, out, _ = self.run_cli("halfv", "check", swap)
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertIn("not realizable (gate 1", out)

        cnot = self.write("cnot.rc", ".lines 2\nt x2 x1\n")
        code, out, _ = self.run_cli("halfv", "check", cnot)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("realizable (2 gates on 2 lines)", out)

    def test_halfv_encode_decode_round_trip(self):
        f = TruthTable(2, 3, (0b000, 0b101, 0b011, 0b110))
        source = self.write("f.tt", serialize_tt(f))
        embedded = self.path("f_halfv.rc")
        decoded = self.path("f_decoded.tt")

        code, _, err = self.run_cli("halfv", "encode", source, "--out", embedded)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("lines: 3", err)
        code, _, _ = self.run_cli("halfv", "decode", embedded, "--out", decoded)
        self.assertEqual(code, EXIT_OK)

        with open(source, encoding="utf-8") as a, open(decoded, encoding="utf-8") as b:
            self.assertEqual(a.read(), b.read())

    def test_halfv_encode_arity_mismatch(self):
        source = self.write("and.tt", ".i 2\n.o 1\n0\n0\n0\n1\n")
        code, _, err = self.run_cli("halfv", "encode", source, "--k", "2")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("Error:", err)

    def test_missing_file(self):
        code, _, err = self.run_cli("sim", self.path("absent.rc"), "0")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("Error:", err)


if __name__ == "__main__":
    unittest.main(verbosity=2)
