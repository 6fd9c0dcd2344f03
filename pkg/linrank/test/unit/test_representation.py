# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Test subspace representations
"""

from fractions import Fraction
from unittest import TestCase
from linrank.representation import (SubspaceRepresentation, RandomPoints, ranks_from_matrices, ranks_mod_p,
                                    all_fields_check, row_basis, intersection_basis)
from linrank.exceptions import ValidationError
from linrank.test.common import (EXAMPLE_MATRICES, POLYMAT_EXAMPLE, U24_MATRICES, letters, matrices,
                                 rank_vector)


class TestRanks(TestCase):
    """
    Test the rank vectors of representations
    """

    def test_rational_ranks(self):
        self.assertEqual(ranks_from_matrices(matrices(EXAMPLE_MATRICES)), rank_vector(POLYMAT_EXAMPLE))

    def test_ranks_mod_p(self):
        representation = matrices(EXAMPLE_MATRICES)
        self.assertEqual(ranks_mod_p(representation, 2 ** 31 - 1), rank_vector(POLYMAT_EXAMPLE))

    def test_four_points_of_a_line_need_three_elements(self):
        representation = matrices(U24_MATRICES)
        universe = representation.universe
        both = universe.varset(["B", "E"]).mask
        self.assertEqual(ranks_from_matrices(representation).value(both), 2)
        self.assertEqual(ranks_mod_p(representation, 2).value(both), 1)
        self.assertEqual(ranks_mod_p(representation, 3), ranks_from_matrices(representation))

    def test_all_fields_check(self):
        self.assertFalse(all_fields_check(matrices(U24_MATRICES)))
        self.assertTrue(all_fields_check(matrices("matrix A 1 2\n1 0\nmatrix B 1 2\n0 1\n")))

    def test_should_raise_on_composite_modulus(self):
        self.assertRaises(ValidationError, ranks_mod_p, matrices(U24_MATRICES), 4)


class TestSubspaceRepresentation(TestCase):
    """
    Test validation of the matrices
    """

    def test_stacked(self):
        representation = matrices(EXAMPLE_MATRICES)
        self.assertEqual(representation.stacked(0b10001), [[1, 0, 0], [1, 1, 0], [0, 0, 1]])
        self.assertEqual(representation.stacked(0), [])

    def test_should_raise_on_missing_matrix(self):
        self.assertRaises(ValidationError, SubspaceRepresentation, letters(2), {"A": [[1]]}, 1)

    def test_should_raise_on_row_length(self):
        self.assertRaises(ValidationError, SubspaceRepresentation, letters(1), {"A": [[1, 2]]}, 3)

    def test_should_raise_on_non_integer_entry(self):
        self.assertRaises(ValidationError, SubspaceRepresentation, letters(1), {"A": [[Fraction(1, 2)]]}, 1)

    def test_equality(self):
        self.assertEqual(matrices(EXAMPLE_MATRICES), matrices(EXAMPLE_MATRICES))
        self.assertNotEqual(matrices(EXAMPLE_MATRICES), matrices(U24_MATRICES))


class TestBases(TestCase):
    """
    Test row bases and intersections
    """

    def test_row_basis(self):
        self.assertEqual(row_basis([[1, 0], [2, 0], [0, 1]]), [[1, 0], [0, 1]])
        self.assertEqual(row_basis([[1, 0], [1, 2]], 2), [[1, 0]])
        self.assertEqual(row_basis([]), [])

    def test_intersection_of_two_planes(self):
        result = intersection_basis([[1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1]], 3)
        self.assertEqual(len(result), 1)
        self.assertEqual(result[0][0], 0)
        self.assertEqual(result[0][2], 0)
        self.assertNotEqual(result[0][1], 0)

    def test_intersection_mod_p(self):
        self.assertEqual(intersection_basis([[1, 0], [0, 1]], [[1, 1]], 2, prime=5), [[1, 1]])

    def test_trivial_intersections(self):
        self.assertEqual(intersection_basis([[1, 0]], [[0, 1]], 2), [])
        self.assertEqual(intersection_basis([[1, 0]], [], 2), [])


class TestRandomPoints(TestCase):

    def test_points_are_reproducible(self):
        spanning = [[1, 0, 0], [0, 1, 0]]
        first = RandomPoints(7, seed=3).points(spanning, 4)
        second = RandomPoints(7, seed=3).points(spanning, 4)
        self.assertEqual(first, second)
        for point in first:
            self.assertEqual(point[2], 0)
            self.assertTrue(all(0 < value < 7 for value in point[:2]))
