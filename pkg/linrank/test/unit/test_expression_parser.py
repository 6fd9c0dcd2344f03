# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Test of the expression and inequality parser
"""

from fractions import Fraction
from unittest import TestCase
import numpy as np
from linrank.universe import VarUniverse
from linrank.expression import (EntropyExpr, InfoTerm, LinearInequality, expand_info_term, format_expression,
                                format_inequality)
from linrank.parsing.expression_parser import (parse_expression, parse_inequality, parse_info_term,
                                               parse_vlist)
from linrank.parsing.tokenizer import LocationException, SourceSpan
from linrank.test.common import INGLETON, letters


class TestExpressionParser(TestCase):
    """
    Test of the expression and inequality parser
    """

    def test_parse_mutual_information(self):
        universe = letters(3)
        expr = parse_expression("I(A;B|C)", universe)
        term = InfoTerm.mutual(universe.varset("A"), universe.varset("B"), universe.varset("C"))
        self.assertEqual(expr, expand_info_term(term))

    def test_parse_coefficients(self):
        universe = letters(2)
        self.assertEqual(parse_expression("2I(A;B)", universe), parse_expression("2*I(A;B)", universe))
        expr = parse_expression("1/2*H(A) - 3H(B|A)", universe)
        self.assertEqual(expr.coeffs, {1: Fraction(7, 2), 3: -3})

    def test_leading_sign(self):
        universe = letters(2)
        self.assertEqual(parse_expression("-H(A)+H(B)", universe).coeffs, {1: -1, 2: 1})
        self.assertEqual(parse_expression("+H(A)", universe).coeffs, {1: 1})

    def test_empty_condition_is_allowed(self):
        universe = letters(2)
        self.assertEqual(parse_expression("I(A;B|)", universe), parse_expression("I(A;B)", universe))
        self.assertEqual(parse_expression("H(A|)", universe), parse_expression("H(A)", universe))

    def test_comments_and_whitespace_are_ignored(self):
        universe = letters(2)
        self.assertEqual(parse_expression("  H( A , B ) # joint entropy", universe).coeffs, {3: 1})

    def test_universe_is_sorted_naturally_without_explicit_universe(self):
        inequality = parse_inequality("H(C10) + H(C2) >= H(X1)")
        self.assertEqual(inequality.universe.names, ("C2", "C10", "X1"))

    def test_parse_ingleton(self):
        inequality = parse_inequality(INGLETON)
        self.assertEqual(inequality.universe, VarUniverse.letters(4))
        self.assertFalse(inequality.equality)
        # I(A;B|C) + I(A;B|D) + I(C;D) - I(A;B)
        self.assertEqual(inequality.expr.coefficient(3), 1)
        self.assertEqual(inequality.expr.coefficient(1), -1)
        self.assertEqual(inequality.expr.coefficient(7), -1)
        self.assertEqual(inequality.expr.coefficient(4), 0)

    def test_relations(self):
        universe = letters(2)
        lesser = parse_inequality("H(A) <= H(A,B)", universe)
        greater = parse_inequality("H(A,B) >= H(A)", universe)
        self.assertEqual(lesser, greater)
        self.assertEqual(format_inequality(lesser), "-H(A)+H(A,B) >= 0")

        equality = parse_inequality("H(A) = H(B)", universe)
        self.assertTrue(equality.equality)
        self.assertEqual(equality.expr.coeffs, {1: 1, 2: -1})

    def test_zero_constant_is_allowed(self):
        universe = letters(2)
        self.assertEqual(parse_inequality("0 <= I(A;B|)", universe),
                         parse_inequality("I(A;B) >= 0", universe))

    def test_label(self):
        self.assertEqual(parse_inequality(INGLETON, label="ingleton").label, "ingleton")

    def test_parse_info_term(self):
        universe = letters(4)
        term = parse_info_term("I(A,B;C|D)", universe)
        self.assertEqual(str(term), "I(A,B;C|D)")

    def test_parse_vlist(self):
        self.assertEqual(parse_vlist("C,D", letters(4)).mask, 12)

    def _assert_error(self, code, message, column, universe=None, line=1):
        try:
            parse_inequality(code, universe)
        except LocationException as exc:
            self.assertEqual(exc.message, message)
            self.assertEqual(exc.location.line, line)
            self.assertEqual(exc.location.column, column)
        else:
            self.fail("Expected LocationException for %r" % code)

    def test_unterminated_term_fails_at_end_of_input(self):
        self._assert_error("I(A;B|", "Expected ')' got end of input", 7)

    def test_missing_relation(self):
        self._assert_error("I(A;B)", "Expected any of ['<=', '>=', '='] got end of input", 7)

    def test_nonzero_constant_is_rejected(self):
        self._assert_error("3 <= H(A)", "Constant term 3 is not allowed", 1)

    def test_second_relation_is_rejected(self):
        self._assert_error("H(A) <= H(A,B) <= H(A,B,C)", "Only one relation is allowed, found a second '<='", 16)

    def test_unknown_variable(self):
        self._assert_error("H(A) <= H(A,E)", "Unknown variable E", 13, letters(4))

    def test_unexpected_character(self):
        self._assert_error("H(A) $ <= H(A)", "Unexpected character '$'", 6)

    def test_unknown_function(self):
        self._assert_error("G(A) >= 0", "Expected H( or I( got G", 1)

    def test_empty_argument(self):
        self._assert_error("I(A;) >= 0", "Expected variable in second argument got ')'", 5)

    def test_error_on_later_line(self):
        self._assert_error("H(A)\n<= H(A,\n)", "Expected identifier got ')'", 1, line=3)

    def test_division_by_zero(self):
        self._assert_error("1/0*H(A) >= 0", "Division by zero in 1/0", 1)


def random_expression(rng, universe, max_terms=6):
    coeffs = {}
    for _ in range(int(rng.integers(0, max_terms + 1))):
        mask = int(rng.integers(1, universe.full_mask + 1))
        coeffs[mask] = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5)))
    return EntropyExpr(universe, coeffs)


class TestRandomizedText(TestCase):
    """
    Test printing and parsing back random expressions and mutated inequalities
    """

    def test_expression_round_trip(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            universe = letters(int(rng.integers(1, 6)))
            expr = random_expression(rng, universe)
            text = format_expression(expr)
            self.assertEqual(parse_expression(text, universe), expr, text)

    def test_inequality_round_trip(self):
        rng = np.random.default_rng(12)
        for _ in range(200):
            universe = letters(int(rng.integers(1, 6)))
            original = LinearInequality(random_expression(rng, universe), equality=bool(rng.integers(0, 2)))
            text = format_inequality(original)
            self.assertEqual(parse_inequality(text, universe), original, text)

    def test_mutations_are_parsed_or_located(self):
        rng = np.random.default_rng(13)
        alphabet = "ABCDEHI();|,+-*/<=>0123 #"
        for _ in range(1000):
            chars = list(INGLETON)
            for _ in range(int(rng.integers(1, 4))):
                position = int(rng.integers(0, len(chars) + 1))
                operation = int(rng.integers(0, 3))
                char = alphabet[int(rng.integers(0, len(alphabet)))]
                if operation == 0:
                    chars.insert(position, char)
                elif position < len(chars):
                    if operation == 1:
                        chars[position] = char
                    else:
                        del chars[position]
            text = "".join(chars)

            try:
                result = parse_inequality(text, letters(4))
            except LocationException as exc:
                self.assertIsInstance(exc.location, SourceSpan, text)
                self.assertEqual(exc.location.line, 1, text)
                self.assertLessEqual(exc.location.column, len(text) + 1, text)
            else:
                self.assertIsInstance(result, LinearInequality, text)
