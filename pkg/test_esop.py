#!/usr/bin/env python3
"""
Tests for cubes, expansion rules, PPRM and greedy ESOP construction.
"""

import unittest

from rev_boolfn.truth_table import BadVariable, TruthTable, tt_constant, tt_from_bitmask, tt_variable
from rev_esop.cube import (
    Cube,
    EsopError,
    EsopExpr,
    EsopSyntaxError,
    esop_to_table,
    eval_esop,
    format_esop,
    literal_count,
    parse_esop,
    support,
    term_count,
)
from rev_esop.expansion import (
    NEGATIVE_DAVIO,
    POSITIVE_DAVIO,
    SHANNON,
    esop_davio,
    expand_davio_neg,
    expand_davio_pos,
    expand_shannon,
    expression_for,
    pprm,
    recompose,
)


AND = TruthTable(2, 1, (0, 0, 0, 1))
OR = TruthTable(2, 1, (0, 1, 1, 1))


def all_functions(n):
    return [tt_from_bitmask(n, mask) for mask in range(1 << (1 << n))]


class TestCube(unittest.TestCase):
    def test_polarity_must_be_subset_of_care(self):
        with self.assertRaises(EsopError):
            Cube(2, 0b01, 0b10)

    def test_eval_esop(self):
        self.assertEqual(eval_esop(EsopExpr(2, ()), 3), 0)
        self.assertEqual(eval_esop(EsopExpr(2, (Cube(2, 0, 0),)), 1), 1)
        e = EsopExpr(2, (Cube(2, 0b10, 0b10), Cube(2, 0b01, 0b01), Cube(2, 0b11, 0b11)))
        self.assertEqual([eval_esop(e, r) for r in range(4)], [0, 1, 1, 1])

    def test_parse_and_format(self):
        e = parse_esop("x1&!x2 ^ 1", 2)
        self.assertEqual(esop_to_table(e).rows, (1, 1, 0, 1))
        self.assertEqual(format_esop(e), "1 ^ x1&!x2")
        self.assertEqual(format_esop(EsopExpr(3, ())), "0")
        self.assertEqual(term_count(parse_esop("0", 3)), 0)
        self.assertEqual(literal_count(e), 2)
        self.assertEqual(list(support(parse_esop("x3 ^ x1", 3))), [1, 3])

    def test_parse_errors(self):
        with self.assertRaises(EsopSyntaxError):
            parse_esop("x1&!x1", 2)
        with self.assertRaises(EsopSyntaxError):
            parse_esop("x1 & y2", 2)
        with self.assertRaises(EsopSyntaxError):
            parse_esop("", 2)


class TestExpansionRules(unittest.TestCase):
    def test_shannon_examples(self):
        x1 = tt_variable(1, 1)
        self.assertEqual(expand_shannon(x1, 1), (tt_constant(0, 0), tt_constant(0, 1)))
        neg, pos = expand_shannon(AND, 2)
        self.assertTrue(neg.is_constant(0))
        self.assertEqual(pos, tt_variable(1, 1))
        with self.assertRaises(BadVariable):
            expand_shannon(AND, 3)

    def test_davio_examples(self):
        x1 = tt_variable(1, 1)
        not_x1 = tt_variable(1, 1, positive=False)
        self.assertEqual(expand_davio_pos(not_x1, 1), (tt_constant(0, 1), tt_constant(0, 1)))
        self.assertEqual(expand_davio_pos(x1, 1), (tt_constant(0, 0), tt_constant(0, 1)))
        self.assertEqual(expand_davio_neg(x1, 1), (tt_constant(0, 1), tt_constant(0, 1)))
        zero = tt_constant(1, 0)
        self.assertEqual(expand_davio_neg(zero, 1), (tt_constant(0, 0), tt_constant(0, 0)))

    def test_recomposition_exhaustive(self):
        rules = {
            SHANNON: expand_shannon,
            POSITIVE_DAVIO: expand_davio_pos,
            NEGATIVE_DAVIO: expand_davio_neg,
        }
        for f in all_functions(3):
            for i in range(1, 4):
                for rule, expand in rules.items():
                    a, b = expand(f, i)
                    self.assertEqual(recompose(rule, a, b, i), f, msg=f"{rule} x{i} {f.rows}")


class TestPprm(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(format_esop(pprm(AND)), "x1&x2")
        self.assertEqual(format_esop(pprm(OR)), "x2 ^ x1 ^ x1&x2")
        self.assertEqual(term_count(pprm(OR)), 3)
        self.assertEqual(pprm(tt_constant(2, 0)).cubes, ())
        parity = TruthTable(3, 1, tuple(bin(r).count("1") & 1 for r in range(8)))
        self.assertEqual(term_count(pprm(parity)), 3)

    def test_positive_correct_and_unique(self):
        for n in range(1, 4):
            seen = set()
            for f in all_functions(n):
                e = pprm(f)
                self.assertTrue(all(cube.is_positive for cube in e.cubes))
                self.assertEqual(esop_to_table(e), f)
                self.assertLessEqual(term_count(e), 1 << n)
                seen.add(e.cubes)
            self.assertEqual(len(seen), 1 << (1 << n))

    def test_term_bound_is_reached(self):
        for n in range(1, 4):
            worst = max(term_count(pprm(f)) for f in all_functions(n))
            self.assertEqual(worst, 1 << n)


class TestEsopDavio(unittest.TestCase):
    def test_pprm_policy_matches_pprm(self):
        for f in all_functions(3):
            self.assertEqual(esop_davio(f, "pprm").cubes, pprm(f).cubes)

    def test_greedy_or(self):
        e = esop_davio(OR)
        self.assertEqual(format_esop(e), "1 ^ !x1&!x2")
        self.assertEqual(term_count(e), 2)

    def test_greedy_constant_one(self):
        e = esop_davio(tt_constant(3, 1))
        self.assertEqual(e.cubes, (Cube(3, 0, 0),))

    def test_greedy_correct_and_never_worse_than_pprm(self):
        for n in range(1, 4):
            for f in all_functions(n):
                e = esop_davio(f)
                self.assertEqual(esop_to_table(e), f)
                self.assertLessEqual(term_count(e), term_count(pprm(f)))

    def test_fixed_polarity(self):
        # all-negative polarity of AND: x1 x2 = (1 ^ !x1)(1 ^ !x2)
        e = esop_davio(AND, "fixed", polarities=[0, 0])
        self.assertEqual(esop_to_table(e), AND)
        self.assertTrue(all(cube.polarity == 0 for cube in e.cubes))
        self.assertEqual(term_count(e), 4)
        with self.assertRaises(EsopError):
            esop_davio(AND, "fixed", polarities=[1])

    def test_expression_for(self):
        self.assertEqual(expression_for(OR, "pprm"), pprm(OR))
        self.assertEqual(term_count(expression_for(OR, "esop")), 2)
        with self.assertRaises(EsopError):
            expression_for(OR, "bdd")


if __name__ == "__main__":
    unittest.main(verbosity=2)
