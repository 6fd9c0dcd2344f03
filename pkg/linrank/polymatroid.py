# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Polymatroid axioms, tight sets, extreme rays and faces
"""

import logging
from linrank.universe import VarSet
from linrank.expression import evaluate
from linrank.linalg import exact_rank
from linrank.exceptions import InequalityViolated

LOGGER = logging.getLogger(__name__)


class PolymatroidViolation(object):
    """
    The first pair of subsets breaking an axiom
    """
    MONOTONICITY = "monotonicity"
    SUBMODULARITY = "submodularity"

    def __init__(self, kind, first, second):
        self.kind = kind
        self.first = first
        self.second = second

    def __eq__(self, other):
        return (isinstance(other, PolymatroidViolation) and
                (self.kind, self.first, self.second) == (other.kind, other.first, other.second))

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        return "%s violated by {%s} and {%s}" % (self.kind, self.first, self.second)

    def __repr__(self):
        return "PolymatroidViolation(%s)" % str(self)


def validate_polymatroid(vector):
    """
    None for a polymatroid, otherwise the first violation found
    """
    universe = vector.universe
    full = universe.full_mask

    for first in range(full + 1):
        for second in range(full + 1):
            if first & ~second == 0 and vector.value(first) > vector.value(second):
                return PolymatroidViolation(PolymatroidViolation.MONOTONICITY,
                                            VarSet(universe, first),
                                            VarSet(universe, second))

    for first in range(1, full + 1):
        for second in range(first + 1, full + 1):
            union = vector.value(first | second) + vector.value(first & second)
            if vector.value(first) + vector.value(second) < union:
                return PolymatroidViolation(PolymatroidViolation.SUBMODULARITY,
                                            VarSet(universe, first),
                                            VarSet(universe, second))
    return None


def tight_set(vector, inequalities):
    """
    Indices of the inequalities holding with equality, every inequality must hold
    """
    result = []
    for index, inequality in enumerate(inequalities):
        value = evaluate(inequality, vector)
        if value < 0:
            raise InequalityViolated(inequality.label or str(inequality), index, value)
        if value == 0:
            result.append(index)
    return result


def _coefficient_rows(inequalities, indices):
    return [inequalities[index].expr.to_dense() for index in indices]


def extremality_check(vector, inequalities):
    """
    True when the tight inequalities cut the cone down to the ray of the vector
    """
    tight = tight_set(vector, inequalities)
    rank = exact_rank(_coefficient_rows(inequalities, tight))
    LOGGER.debug("%i tight inequalities of coefficient rank %i", len(tight), rank)
    return rank == vector.universe.num_coords - 1


def face_check(inequality, stockpile):
    """
    True when the tight stockpile vectors span a hyperplane
    """
    tight = [vector.coords for vector in stockpile if evaluate(inequality, vector) == 0]
    if not tight:
        return False
    rank = exact_rank([list(coords) for coords in tight])
    LOGGER.debug("%i tight stockpile vectors of rank %i", len(tight), rank)
    return rank == inequality.universe.num_coords - 1
