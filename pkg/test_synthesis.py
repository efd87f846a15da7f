#!/usr/bin/env python3
"""
Tests for Young subgroup decomposition and V-shaped synthesis.
"""

import itertools
import unittest

import numpy as np

from rev_boolfn.truth_table import (
    BadVariable,
    Permutation,
    compose,
    identity_perm,
    random_perm,
)
from rev_circuit.gates import Circuit, MpmctGate, SingleTargetGate, circuit_perm
from rev_synthesis.young import (
    SynthesisError,
    YoungSubgroupSynthesizer,
    decompose_once,
    synth_to_toffoli,
    synth_young,
)


SWAP = Permutation(2, (0, 2, 1, 3))


def gate_perm(gate, lines):
    return circuit_perm(Circuit(lines, (gate,)))


def preserves_bit(p, var):
    bit = 1 << (p.n - var)
    return all((p[s] & bit) == (s & bit) for s in range(len(p)))


def expected_targets(order):
    return list(order) + list(reversed(order))[1:]


def is_subsequence(items, sequence):
    position = iter(sequence)
    return all(item in position for item in items)


class TestDecomposeOnce(unittest.TestCase):
    def check_step(self, f, var):
        step = decompose_once(f, var)
        self.assertTrue(preserves_bit(step.inner, var))
        first = gate_perm(step.first_gate(), f.n)
        last = gate_perm(step.last_gate(), f.n)
        self.assertEqual(compose(last, compose(step.inner, first)), f)

    def test_identity(self):
        for var in range(1, 4):
            step = decompose_once(identity_perm(3), var)
            self.assertTrue(step.g1.is_constant(0))
            self.assertTrue(step.g2.is_constant(0))
            self.assertTrue(step.inner.is_identity())

    def test_swap(self):
        step = decompose_once(SWAP, 1)
        self.assertEqual(step.g1.rows, (0, 1))
        self.assertEqual(step.g2.rows, (0, 1))
        # inner is CNOT with control 1 and target 2
        self.assertEqual(step.inner.map, (0, 1, 3, 2))
        self.check_step(SWAP, 1)

    def test_random_n5(self):
        rng = np.random.default_rng(42)
        for _ in range(200):
            f = random_perm(5, rng)
            for var in range(1, 6):
                self.check_step(f, var)

    def test_bad_variable(self):
        with self.assertRaises(BadVariable):
            decompose_once(SWAP, 3)


class TestSynthYoung(unittest.TestCase):
    def test_identity_is_empty(self):
        self.assertEqual(synth_young(identity_perm(3)).gates, ())

    def test_single_not(self):
        c = synth_young(Permutation(1, (1, 0)))
        self.assertEqual(len(c.gates), 1)
        gate = c.gates[0]
        self.assertEqual(gate.controls, ())
        self.assertEqual(gate.g.rows, (1,))

    def test_toffoli_is_one_gate(self):
        toffoli = Permutation(3, (0, 1, 2, 3, 4, 5, 7, 6))
        c = synth_young(toffoli)
        self.assertEqual(len(c.gates), 1)
        self.assertEqual(c.gates[0].target, 3)
        self.assertEqual(c.gates[0].g.rows, (0, 0, 0, 1))

    def test_all_three_line_functions(self):
        synthesizer = YoungSubgroupSynthesizer()
        for images in itertools.permutations(range(8)):
            f = Permutation(3, images)
            c = synthesizer.synthesize(f)
            self.assertLessEqual(len(c.gates), 5)
            self.assertEqual(circuit_perm(c), f)

    def test_random_functions_up_to_eight_lines(self):
        rng = np.random.default_rng(7)
        for n in range(4, 9):
            for _ in range(20):
                f = random_perm(n, rng)
                c = synth_young(f)
                self.assertLessEqual(len(c.gates), 2 * n - 1)
                self.assertEqual(circuit_perm(c), f)

    def test_v_shape_for_every_order(self):
        rng = np.random.default_rng(8)
        f = random_perm(4, rng)
        for order in itertools.permutations(range(1, 5)):
            c = synth_young(f, order)
            self.assertEqual(circuit_perm(c), f)
            targets = [gate.target for gate in c.gates]
            self.assertTrue(is_subsequence(targets, expected_targets(order)))

    def test_v_shape_without_dropping(self):
        f = random_perm(4, np.random.default_rng(9))
        order = (4, 3, 2, 1)
        c = YoungSubgroupSynthesizer(order, drop_identity=False).synthesize(f)
        self.assertEqual([gate.target for gate in c.gates], expected_targets(order))
        for gate in c.gates:
            self.assertIsInstance(gate, SingleTargetGate)
            self.assertEqual(len(gate.controls), 3)

    def test_residuals_preserve_processed_bits(self):
        f = random_perm(5, np.random.default_rng(10))
        order = (2, 5, 1, 4, 3)
        steps = YoungSubgroupSynthesizer(order).decompose_all(f)
        for index, step in enumerate(steps):
            for var in order[:index + 1]:
                self.assertTrue(preserves_bit(step.inner, var))
        self.assertTrue(steps[-1].inner.is_identity())

    def test_deterministic(self):
        f = random_perm(5, np.random.default_rng(12))
        self.assertEqual(synth_young(f), synth_young(f))

    def test_invalid_order(self):
        with self.assertRaises(SynthesisError):
            synth_young(SWAP, (1, 1))


class TestSynthToToffoli(unittest.TestCase):
    def test_identity(self):
        self.assertEqual(synth_to_toffoli(identity_perm(3)).gates, ())

    def test_swap(self):
        for method in ("pprm", "esop"):
            c = synth_to_toffoli(SWAP, method=method)
            self.assertTrue(all(isinstance(gate, MpmctGate) for gate in c.gates))
            self.assertEqual([circuit_perm(c)[s] for s in range(4)], [0, 2, 1, 3])

    def test_random_four_lines(self):
        rng = np.random.default_rng(13)
        for _ in range(10):
            f = random_perm(4, rng)
            for method in ("pprm", "esop"):
                self.assertEqual(circuit_perm(synth_to_toffoli(f, method=method)), f)


if __name__ == "__main__":
    unittest.main(verbosity=2)
