# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
License header sanity check
"""

import unittest
from os.path import join, splitext
from os import walk
import re
from linrank import ROOT
import linrank.ostools as ostools
from linrank.about import license_text

RE_LICENSE_NOTICE = re.compile(
    r"# This Source Code Form is subject to the terms of the Mozilla Public" + "\n"
    r"# License, v\. 2\.0\. If a copy of the MPL was not distributed with this file," + "\n"
    r"# You can obtain one at http://mozilla\.org/MPL/2\.0/\." + "\n"
    r"#" + "\n"
    r"# Copyright \(c\) (?P<first_year>20\d\d)(-(?P<last_year>20\d\d))?, linrank contributors")


class TestLicense(unittest.TestCase):
    """
    Test that each python file of the package starts with a valid license notice
    """

    def test_that_a_valid_license_exists_in_source_files(self):
        for file_name in find_licensed_files():
            code = ostools.read_file(file_name)
            match = RE_LICENSE_NOTICE.match(code)
            self.assertIsNotNone(match, "Failed to find license notice in %s" % file_name)
            if match.group("last_year") is not None:
                self.assertLess(int(match.group("first_year")), int(match.group("last_year")),
                                "Bad copyright year range in %s" % file_name)
            self._check_no_trailing_whitespace(code, file_name)

    def test_that_license_file_matches_linrank_license_text(self):
        with open(join(ROOT, 'LICENSE.txt'), "r") as lic:
            self.assertEqual(lic.read(), license_text())

    def _check_no_trailing_whitespace(self, code, file_name):
        for idx, line in enumerate(code.splitlines()):
            self.assertEqual(line, line.rstrip(),
                             "Line %i of %s contains trailing whitespace" % (idx + 1, file_name))


def find_licensed_files():
    """
    Return all python files of the package
    """
    licensed_files = []
    for root, _, files in walk(join(ROOT, "linrank")):
        for file_name in files:
            if splitext(file_name)[1] == ".py":
                licensed_files.append(join(root, file_name))
    return licensed_files
