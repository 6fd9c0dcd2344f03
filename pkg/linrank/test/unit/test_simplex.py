# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Test the exact simplex and the floating point warm start
"""

from fractions import Fraction
from unittest import TestCase
from linrank.simplex import FarkasSystem, SimplexResult, integer_direction
from linrank.warm_start import warm_solve


class TestIntegerDirection(TestCase):

    def test_clears_denominators(self):
        self.assertEqual(integer_direction([Fraction(1, 2), Fraction(-1, 3), 0]), [3, -2, 0])

    def test_divides_common_factor(self):
        self.assertEqual(integer_direction([2, 4, -6]), [1, 2, -3])


class TestFarkasSystem(TestCase):
    """
    Test the exact Farkas system solve
    """

    def test_feasible(self):
        result = FarkasSystem(1, [{0: 1}], [], {0: 2}).solve()
        self.assertTrue(result.feasible)
        self.assertEqual(result.lambdas, {0: 2})

    def test_infeasible_gives_farkas_witness(self):
        result = FarkasSystem(1, [{0: 1}], [], {0: -1}).solve()
        self.assertTrue(result.infeasible)
        self.assertEqual(result.witness, [1])

    def test_free_column(self):
        result = FarkasSystem(1, [], [{0: 1}], {0: -3}).solve()
        self.assertTrue(result.feasible)
        self.assertEqual(result.mus, {0: -3})
        self.assertEqual(result.lambdas, {})

    def test_restricted_keeps_column_ids(self):
        system = FarkasSystem(2, [{0: 1}, {1: 1}], [], {1: 5})
        result = system.restricted([1]).solve()
        self.assertTrue(result.feasible)
        self.assertEqual(result.lambdas, {1: 5})

    def test_combination(self):
        # t = e0 + 2 e1 with a redundant third column
        system = FarkasSystem(2, [{0: 1}, {1: 1}, {0: 1, 1: -1}], [], {0: 1, 1: 2})
        result = system.solve()
        self.assertTrue(result.feasible)
        total = [sum(value * system.columns[col].get(row, 0) for col, value in result.lambdas.items())
                 for row in range(2)]
        self.assertEqual(total, [1, 2])
        self.assertTrue(all(value > 0 for value in result.lambdas.values()))

    def test_witness_separates(self):
        columns = [{0: 1, 1: -1}, {1: 1}]
        target = {0: -1, 1: 1}
        result = FarkasSystem(2, columns, [], target).solve()
        self.assertTrue(result.infeasible)
        witness = result.witness
        for column in columns:
            self.assertGreaterEqual(sum(value * witness[row] for row, value in column.items()), 0)
        self.assertLess(sum(value * witness[row] for row, value in target.items()), 0)

    def test_pivot_limit(self):
        result = FarkasSystem(1, [{0: 1}], [], {0: 2}).solve(pivot_limit=0)
        self.assertEqual(result.status, SimplexResult.UNDECIDED)
        self.assertFalse(result.feasible)
        self.assertFalse(result.infeasible)


class TestWarmStart(TestCase):
    """
    Test that warm start answers are exact
    """

    def test_feasible(self):
        system = FarkasSystem(2, [{0: 1}, {1: 1}, {0: 1, 1: -1}], [], {0: 1, 1: 2})
        result = warm_solve(system, 10 ** 7)
        self.assertIsNotNone(result)
        self.assertTrue(result.feasible)
        total = [sum(value * system.columns[col].get(row, 0) for col, value in result.lambdas.items())
                 for row in range(2)]
        self.assertEqual(total, [1, 2])

    def test_infeasible(self):
        columns = [{0: 1, 1: -1}, {1: 1}]
        target = {0: -1, 1: 1}
        result = warm_solve(FarkasSystem(2, columns, [], target), 10 ** 7)
        if result is not None:
            self.assertTrue(result.infeasible)
            self.assertLess(sum(value * result.witness[row] for row, value in target.items()), 0)
            for column in columns:
                self.assertGreaterEqual(sum(value * result.witness[row] for row, value in column.items()), 0)
