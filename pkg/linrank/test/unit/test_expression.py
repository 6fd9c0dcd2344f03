# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Test entropy expressions, information terms and inequalities
"""

import random
from fractions import Fraction
from unittest import TestCase
from linrank.universe import VarUniverse, Permutation
from linrank.expression import (EntropyExpr, InfoTerm, LinearInequality, expand_info_term, info_sum,
                                evaluate, substitute, apply_permutation, linear_identical,
                                find_permutation, same_orbit, inequality_orbit, format_expression,
                                format_coefficient, format_inequality)
from linrank.rank_vector import RankVector
from linrank.parsing.expression_parser import parse_expression, parse_inequality
from linrank.exceptions import UniverseError
from linrank.test.common import POLYMAT_EXAMPLE, INGLETON, rank_vector


class TestExpandInfoTerm(TestCase):
    """
    Test the expansion of information terms into joint entropies
    """

    def setUp(self):
        self.universe = VarUniverse.letters(3)
        self.a = self.universe.varset("A")
        self.b = self.universe.varset("B")
        self.c = self.universe.varset("C")

    def test_mutual_information(self):
        expr = expand_info_term(InfoTerm.mutual(self.a, self.b))
        self.assertEqual(expr.coeffs, {1: 1, 2: 1, 3: -1})
        self.assertEqual(format_expression(expr), "H(A)+H(B)-H(A,B)")

    def test_mutual_information_with_itself_is_entropy(self):
        expr = expand_info_term(InfoTerm.mutual(self.a, self.a))
        self.assertEqual(expr, EntropyExpr.entropy(self.a))

    def test_conditional_mutual_information(self):
        expr = expand_info_term(InfoTerm.mutual(self.a, self.b, self.c))
        self.assertEqual(expr.coeffs, {5: 1, 6: 1, 7: -1, 4: -1})
        self.assertEqual(sum(expr.coeffs.values()), 0)

    def test_conditional_entropy(self):
        expr = expand_info_term(InfoTerm.conditional(self.a, self.b | self.c))
        self.assertEqual(expr.coeffs, {7: 1, 6: -1})

    def test_unconditioned_entropy(self):
        expr = expand_info_term(InfoTerm.conditional(self.a | self.b))
        self.assertEqual(expr.coeffs, {3: 1})

    def test_should_raise_on_empty_arguments(self):
        empty = self.universe.varset()
        self.assertRaises(UniverseError, InfoTerm.mutual, self.a, empty)
        self.assertRaises(UniverseError, InfoTerm.conditional, empty)

    def test_should_raise_when_mixing_universes(self):
        other = VarUniverse.letters(4).varset("A")
        self.assertRaises(UniverseError, InfoTerm.mutual, self.a, other)

    def test_info_sum(self):
        expr = info_sum([(2, InfoTerm.mutual(self.a, self.b)),
                         (-1, InfoTerm.conditional(self.a))])
        self.assertEqual(expr.coeffs, {1: 1, 2: 2, 3: -2})

    def test_str(self):
        self.assertEqual(str(InfoTerm.mutual(self.a, self.b | self.c, self.c)), "I(A;B,C|C)")
        self.assertEqual(str(InfoTerm.conditional(self.a, self.b)), "H(A|B)")


class TestEntropyExpr(TestCase):
    """
    Test the exact linear algebra of expressions
    """

    def setUp(self):
        self.universe = VarUniverse.letters(3)

    def test_zero_coefficients_are_not_stored(self):
        self.assertTrue(EntropyExpr(self.universe, {1: 0, 2: Fraction(0)}).is_zero())
        self.assertEqual(EntropyExpr(self.universe, {1: 1}) - EntropyExpr(self.universe, {1: 1}),
                         EntropyExpr.zero(self.universe))

    def test_empty_set_is_dropped(self):
        self.assertEqual(EntropyExpr(self.universe, {0: 5, 1: 1}).coeffs, {1: 1})

    def test_scale(self):
        expr = parse_expression("I(A;B)", self.universe)
        self.assertEqual(2 * expr, parse_expression("2*I(A;B)", self.universe))
        self.assertEqual(expr.scale(Fraction(1, 2)).coefficient(3), Fraction(-1, 2))

    def test_to_dense(self):
        expr = parse_expression("H(A|B)", self.universe)
        self.assertEqual(expr.to_dense(), [0, -1, 1, 0, 0, 0, 0])

    def test_lift(self):
        expr = parse_expression("I(A;B|C)", self.universe)
        lifted = expr.lift(VarUniverse.letters(4))
        self.assertEqual(lifted.coeffs, expr.coeffs)
        self.assertRaises(UniverseError, expr.lift, VarUniverse(["B", "A", "C", "D"]))

    def test_should_raise_when_adding_different_universes(self):
        first = parse_expression("H(A)", self.universe)
        second = parse_expression("H(A)", VarUniverse.letters(4))
        self.assertRaises(UniverseError, lambda: first + second)

    def test_format_coefficient(self):
        self.assertEqual(format_coefficient(Fraction(1), True), "")
        self.assertEqual(format_coefficient(Fraction(-1), True), "-")
        self.assertEqual(format_coefficient(Fraction(2), False), "+2*")
        self.assertEqual(format_coefficient(Fraction(1, 2), True), "1/2*")

    def test_format_zero(self):
        self.assertEqual(format_expression(EntropyExpr.zero(self.universe)), "0")


class TestEvaluate(TestCase):
    """
    Test evaluation at rank vectors
    """

    def test_ingleton_is_tight_on_polymat_example(self):
        inequality = parse_inequality(INGLETON, VarUniverse.letters(5))
        self.assertEqual(evaluate(inequality, rank_vector(POLYMAT_EXAMPLE)), 0)

    def test_zero_vector(self):
        universe = VarUniverse.letters(2)
        self.assertEqual(evaluate(parse_expression("H(A)", universe), RankVector.zero(universe)), 0)

    def test_evaluate_is_exact(self):
        universe = VarUniverse.letters(2)
        expr = parse_expression("1/3*H(A) + 1/6*H(B)", universe)
        self.assertEqual(evaluate(expr, RankVector(universe, [1, 1, 2])), Fraction(1, 2))

    def test_evaluate_is_linear(self):
        universe = VarUniverse.letters(4)
        first = parse_expression("I(A;B|C)-H(D)", universe)
        second = parse_expression("I(A,B;C,D)+2*H(A|D)", universe)
        vector = RankVector.from_function(universe, lambda mask: bin(mask).count("1") ** 2)
        rng = random.Random(2)
        for _ in range(10):
            scale_a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            scale_b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            self.assertEqual(evaluate(first * scale_a + second * scale_b, vector),
                             scale_a * evaluate(first, vector) + scale_b * evaluate(second, vector))

    def test_should_raise_on_size_mismatch(self):
        expr = parse_expression("H(A)", VarUniverse.letters(2))
        self.assertRaises(UniverseError, evaluate, expr, RankVector.zero(VarUniverse.letters(3)))


class TestLinearInequality(TestCase):
    """
    Test inequalities, substitution and permutation orbits
    """

    def test_from_sides(self):
        universe = VarUniverse.letters(2)
        inequality = LinearInequality.from_sides(parse_expression("I(A;B)", universe),
                                                 parse_expression("H(A)", universe))
        self.assertEqual(inequality.expr, parse_expression("H(A|B)", universe))
        self.assertEqual(format_inequality(inequality), "-H(B)+H(A,B) >= 0")

    def test_equality_as_pair(self):
        universe = VarUniverse.letters(2)
        expr = parse_expression("H(A)", universe)
        self.assertEqual(LinearInequality(expr).as_pair(), [LinearInequality(expr)])
        pair = LinearInequality(expr, equality=True).as_pair()
        self.assertEqual([item.expr for item in pair], [expr, -expr])

    def test_with_label_keeps_equality_of_coefficients(self):
        inequality = parse_inequality(INGLETON)
        self.assertEqual(inequality.with_label("ingleton"), inequality)
        self.assertEqual(inequality.with_label("ingleton").label, "ingleton")

    def test_identity_substitution(self):
        inequality = parse_inequality(INGLETON)
        universe = inequality.universe
        mapping = dict((name, [name]) for name in universe)
        self.assertEqual(substitute(inequality, mapping, universe), inequality)

    def test_substitution_gives_ingleton_instance(self):
        target = VarUniverse.letters(5)
        inequality = parse_inequality(INGLETON)
        mapping = {"A": ["A"], "B": ["B"], "C": ["C"], "D": ["D", "E"]}
        expected = parse_inequality("I(A;B) <= I(A;B|C) + I(A;B|D,E) + I(C;D,E)", target)
        self.assertEqual(substitute(inequality, mapping, target), expected)

    def test_substitution_to_empty_set_drops_terms(self):
        universe = VarUniverse.letters(2)
        expr = parse_expression("H(A)+H(B)", universe)
        result = substitute(expr, {"A": [], "B": ["A"]}, universe)
        self.assertEqual(result, parse_expression("H(A)", universe))

    def test_substitute_commutes_with_expansion(self):
        source = VarUniverse.letters(3)
        target = VarUniverse.letters(4)
        mapping = {"A": ["A", "D"], "B": ["C"], "C": ["B", "D"]}
        term = InfoTerm.mutual(source.varset("A"), source.varset("B"), source.varset("C"))
        image = InfoTerm.mutual(target.varset(["A", "D"]), target.varset("C"), target.varset(["B", "D"]))
        self.assertEqual(substitute(expand_info_term(term), mapping, target), expand_info_term(image))

    def test_should_raise_on_partial_substitution(self):
        universe = VarUniverse.letters(2)
        self.assertRaises(UniverseError, substitute, parse_expression("H(A)", universe), {"A": ["A"]}, universe)

    def test_ingleton_is_symmetric_in_c_and_d(self):
        inequality = parse_inequality(INGLETON)
        swap = Permutation.swap(4, 2, 3)
        self.assertEqual(apply_permutation(inequality, swap), inequality)
        self.assertNotEqual(apply_permutation(inequality, Permutation.swap(4, 0, 2)), inequality)

    def test_identity_permutation(self):
        inequality = parse_inequality(INGLETON)
        self.assertEqual(apply_permutation(inequality, Permutation.identity(4)), inequality)

    def test_linear_identical(self):
        universe = VarUniverse.letters(2)
        self.assertTrue(linear_identical(parse_expression("I(A;B)", universe),
                                         parse_expression("I(B;A)", universe)))
        self.assertFalse(linear_identical(parse_expression("I(A;B)", universe),
                                          parse_expression("H(A)", universe)))

    def test_find_permutation(self):
        first = parse_inequality(INGLETON)
        second = parse_inequality("I(C;D) <= I(C;D|A) + I(C;D|B) + I(A;B)")
        permutation = find_permutation(first, second)
        self.assertIsNotNone(permutation)
        self.assertEqual(first.permuted(permutation), second)
        self.assertTrue(same_orbit(first, second))

    def test_find_permutation_of_different_inequalities(self):
        first = parse_inequality(INGLETON)
        second = parse_inequality("H(A) + H(B) + H(C) + H(D) >= 0")
        self.assertIsNone(find_permutation(first, second))

    def test_ingleton_orbit_has_six_instances(self):
        orbit = inequality_orbit(parse_inequality(INGLETON))
        self.assertEqual(len(orbit), 6)
        self.assertEqual(len(set(orbit)), 6)
