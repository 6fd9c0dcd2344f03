# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
The built in catalog of linear rank inequalities and of the forests
generating some of them
"""

from os.path import abspath, join, dirname
from linrank.ostools import read_file
from linrank.parsing.catalog_file import parse_catalog, CatalogEntry  # pylint: disable=unused-import
from linrank.parsing.forest_parser import parse_forest_collection
from linrank.common_information import prove_with_common_informations
from linrank.exceptions import LinRankError

DATA_PATH = abspath(join(dirname(__file__), "data"))
CATALOG_FILE = join(DATA_PATH, "catalog.txt")
FORESTS_FILE = join(DATA_PATH, "forests.txt")

CATALOG_PREFIX = "catalog:"

_CACHE = {}


def _cached(key, load):
    if key not in _CACHE:
        _CACHE[key] = load()
    return _CACHE[key]


def catalog():
    """
    All catalog entries in file order
    """
    return list(_cached("catalog", lambda: parse_catalog(read_file(CATALOG_FILE), CATALOG_FILE)))


def catalog_tags():
    return [entry.tag for entry in catalog()]


def catalog_entry(tag):
    """
    The entry with the tag, a leading 'catalog:' is accepted
    """
    if tag.startswith(CATALOG_PREFIX):
        tag = tag[len(CATALOG_PREFIX):]
    for entry in catalog():
        if entry.tag == tag:
            return entry
    raise LinRankError("Unknown catalog entry %s" % tag)


def catalog_forests():
    return _cached("forests", lambda: parse_forest_collection(read_file(FORESTS_FILE), FORESTS_FILE))


def catalog_forest(tag):
    """
    The forest whose inequality is the catalog entry with the tag
    """
    forests = catalog_forests()
    if tag not in forests:
        raise LinRankError("No forest for catalog entry %s, forests exist for %s"
                           % (tag, ", ".join(forests)))
    return forests[tag]


def prove_entry(entry, settings=None):
    """
    Prove an entry from its own common informations
    """
    return prove_with_common_informations(entry.inequality, entry.recipe, settings)
