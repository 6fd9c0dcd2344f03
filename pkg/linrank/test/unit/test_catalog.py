# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Test the built in catalog
"""

from unittest import TestCase
from linrank.catalog import catalog, catalog_tags, catalog_entry, catalog_forests, catalog_forest, prove_entry
from linrank.forest import validate_forest, forest_inequality
from linrank.expression import linear_identical, evaluate
from linrank.prover import Proved, NotProvable, prove
from linrank.exceptions import LinRankError
from linrank.test.common import INGLETON, POLYMAT_EXAMPLE, inequality, rank_vector


class TestCatalog(TestCase):
    """
    Test the catalog entries
    """

    def test_tags(self):
        tags = catalog_tags()
        self.assertEqual(tags[0], "ingleton")
        self.assertEqual(len(tags), len(set(tags)))
        for number in range(1, 42):
            self.assertIn("(%i)" % number, tags)
        for tag in ["(2CIa)", "(2CIb)", "(2CIc)", "inginst1", "inginst4", "(19b)", "(12a)", "(17d)"]:
            self.assertIn(tag, tags)

    def test_entry(self):
        entry = catalog_entry("ingleton")
        self.assertEqual(entry.inequality, inequality(INGLETON))
        self.assertIs(catalog_entry("catalog:ingleton"), entry)
        self.assertEqual(len(catalog_entry("(25)").universe), 6)

    def test_should_raise_on_unknown_tag(self):
        self.assertRaises(LinRankError, catalog_entry, "(99)")

    def test_identical_entries_have_the_same_coefficients(self):
        for entry in catalog():
            if entry.identical is not None:
                other = catalog_entry(entry.identical)
                self.assertTrue(linear_identical(entry.inequality, other.inequality), entry.tag)

    def test_every_entry_has_a_recipe(self):
        for entry in catalog():
            self.assertTrue(entry.recipe, entry.tag)

    def test_representable_vector_satisfies_five_variable_entries(self):
        vector = rank_vector(POLYMAT_EXAMPLE)
        for entry in catalog():
            if len(entry.universe) == 5:
                self.assertGreaterEqual(evaluate(entry.inequality, vector), 0, entry.tag)

    def test_ingleton_is_proved_from_its_recipe(self):
        entry = catalog_entry("ingleton")
        self.assertIsInstance(prove(entry.inequality), NotProvable)
        self.assertIsInstance(prove_entry(entry), Proved)
        self.assertIsInstance(prove_entry(entry.truncated([])), NotProvable)


class TestCatalogForests(TestCase):
    """
    Test the forests generating catalog entries
    """

    def test_tags(self):
        self.assertEqual(list(catalog_forests()),
                         ["ingleton", "(1)", "(2)", "(8)", "(9)", "(6)", "(10)",
                          "(19b)", "(21b)", "(22b)", "(23b)", "(24b)"])

    def test_forests_generate_their_entries(self):
        for tag, spec in catalog_forests().items():
            self.assertEqual(validate_forest(spec), [], tag)
            self.assertTrue(linear_identical(forest_inequality(spec), catalog_entry(tag).inequality), tag)

    def test_should_raise_on_missing_forest(self):
        self.assertIs(catalog_forest("(1)"), catalog_forests()["(1)"])
        self.assertRaises(LinRankError, catalog_forest, "(3)")
