# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Named sets of inequalities a rank vector is checked against

  shannon            the elemental inequalities
  shannon+ingleton   adds every Ingleton instance
  full-catalog       adds the orbits of the catalog entries (1) to (24)
"""

import logging
from functools import lru_cache
from linrank.elementals import elemental_inequalities
from linrank.expression import inequality_orbit
from linrank.catalog import catalog_entry
from linrank.exceptions import UniverseError

LOGGER = logging.getLogger(__name__)

INEQUALITY_SETS = ("shannon", "shannon+ingleton", "full-catalog")

INGLETON_INSTANCES = {4: ("ingleton",),
                      5: ("inginst1", "inginst2", "inginst3", "inginst4")}

CORE_CATALOG = tuple("(%i)" % number for number in range(1, 25))


def shannon_set(universe):
    return list(elemental_inequalities(universe))


def _orbits(tags, universe):
    result = []
    for tag in tags:
        inequality = catalog_entry(tag).inequality.renamed(universe)
        result.extend(image.with_label("%s%s" % (tag, _suffix(index)))
                      for index, image in enumerate(inequality_orbit(inequality)))
    return result


def _suffix(index):
    return "" if index == 0 else "#%i" % index


def ingleton_instances(universe):
    """
    Every permuted form of the Ingleton instances on four or five variables
    """
    if len(universe) not in INGLETON_INSTANCES:
        raise UniverseError("Ingleton instances are known for 4 and 5 variables, got %i"
                            % len(universe))
    return _orbits(INGLETON_INSTANCES[len(universe)], universe)


def catalog_orbits(universe):
    """
    Every permuted form of the five variable catalog inequalities (1) to (24)
    """
    if len(universe) != 5:
        raise UniverseError("The catalog inequalities have 5 variables, got %i" % len(universe))
    return _orbits(CORE_CATALOG, universe)


def _deduplicated(inequalities):
    seen = set()
    result = []
    for inequality in inequalities:
        if inequality not in seen:
            seen.add(inequality)
            result.append(inequality)
    return result


@lru_cache(maxsize=None)
def _inequality_set(spec, universe):
    if spec not in INEQUALITY_SETS:
        raise ValueError("Unknown inequality set %s, expected one of %s"
                         % (spec, ", ".join(INEQUALITY_SETS)))

    result = shannon_set(universe)
    if spec != "shannon":
        result.extend(ingleton_instances(universe))
    if spec == "full-catalog" and len(universe) == 5:
        result.extend(catalog_orbits(universe))
    result = _deduplicated(result)
    LOGGER.debug("Inequality set %s over %s has %i inequalities", spec, universe, len(result))
    return tuple(result)


def inequality_set(spec, universe):
    """
    The inequalities of a named set over the universe, without duplicates
    """
    return list(_inequality_set(spec, universe))
