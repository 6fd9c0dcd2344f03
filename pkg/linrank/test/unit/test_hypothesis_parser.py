# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Test of the common information declaration parser
"""

from unittest import TestCase
from linrank.parsing.hypothesis_parser import (HypothesisDecl, parse_hypotheses, format_hypotheses,
                                               hypothesis_universe, hypothesis_equalities)
from linrank.parsing.tokenizer import LocationException
from linrank.parsing.expression_parser import parse_expression
from linrank.test.common import letters


class TestHypothesisParser(TestCase):
    """
    Test of the common information declaration parser
    """

    def test_parse_single_declaration(self):
        decls = parse_hypotheses("Z = CI(A ; B,C)\n", letters(5))
        self.assertEqual(decls, [HypothesisDecl("Z", ["A"], ["B", "C"])])
        self.assertEqual(decls[0].location.line, 1)

    def test_comments_and_blank_lines_are_skipped(self):
        decls = parse_hypotheses("""\
# first
Z = CI(A ; B)

Y = CI(A;C)
""", letters(3))
        self.assertEqual([str(decl) for decl in decls], ["Z = CI(A ; B)", "Y = CI(A ; C)"])
        self.assertEqual(decls[1].location.line, 4)

    def test_later_declaration_may_reference_earlier(self):
        decls = parse_hypotheses("Z = CI(A ; B,C)\nW = CI(F ; Z)\n", letters(6))
        self.assertEqual(decls[1].references(), ("F", "Z"))

    def test_format_round_trip(self):
        code = "Z = CI(A,B ; C,D)\nY = CI(Z ; E)\n"
        self.assertEqual(format_hypotheses(parse_hypotheses(code, letters(5))), code)

    def _assert_error(self, code, message, line, column, ground=None):
        try:
            parse_hypotheses(code, ground)
        except LocationException as exc:
            self.assertEqual(exc.message, message)
            self.assertEqual((exc.location.line, exc.location.column), (line, column))
        else:
            self.fail("Expected LocationException")

    def test_redeclaration(self):
        self._assert_error("Z = CI(A ; B)\nZ = CI(A ; C)\n", "Redeclaration of Z", 2, 1, letters(3))

    def test_declaration_of_ground_variable(self):
        self._assert_error("A = CI(B ; C)\n", "Redeclaration of A", 1, 1, letters(3))

    def test_forward_reference(self):
        self._assert_error("Z = CI(A ; Y)\nY = CI(A ; B)\n", "Forward reference to Y", 1, 12, letters(3))

    def test_self_reference_is_forward(self):
        self._assert_error("Z = CI(A ; Z)\n", "Forward reference to Z", 1, 12, letters(3))

    def test_unknown_variable(self):
        self._assert_error("Z = CI(A ; Q)\n", "Unknown variable Q", 1, 12, letters(3))

    def test_wrong_keyword(self):
        self._assert_error("Z = GK(A ; B)\n", "Expected CI got GK", 1, 5)

    def test_trailing_tokens(self):
        self._assert_error("Z = CI(A ; B) C\n", "Expected end of line got identifier", 1, 15)


class TestHypothesisEqualities(TestCase):
    """
    Test of the equalities implied by a declaration
    """

    def test_universe_is_extended_in_declaration_order(self):
        decls = parse_hypotheses("Z = CI(A ; B)\nY = CI(Z ; C)\n", letters(3))
        universe = hypothesis_universe(letters(3), decls)
        self.assertEqual(universe.names, ("A", "B", "C", "Z", "Y"))

    def test_equalities(self):
        ground = letters(2)
        decls = parse_hypotheses("Z = CI(A ; B)\n", ground)
        universe, equalities = hypothesis_equalities(ground, decls)
        self.assertEqual(len(equalities), 3)
        self.assertTrue(all(equality.equality for equality in equalities))
        self.assertEqual(equalities[0].expr, parse_expression("H(Z|A)", universe))
        self.assertEqual(equalities[1].expr, parse_expression("H(Z|B)", universe))
        self.assertEqual(equalities[2].expr, parse_expression("H(Z) - I(A;B)", universe))
        self.assertEqual(equalities[2].label, "Z = CI(A ; B): H(Z) = I(A;B)")
