# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Subspace arrangements given by integer matrices and their rank vectors
"""

import logging
import numpy as np
from linrank.rank_vector import RankVector
from linrank.linalg import (exact_rank, rank_mod_p, nullspace, nullspace_mod_p,
                            elementary_divisors, check_prime)
from linrank.exceptions import ValidationError

LOGGER = logging.getLogger(__name__)


class SubspaceRepresentation(object):
    """
    One integer matrix per variable, the row space of the matrix is the
    subspace of the variable.  A matrix may have no rows.
    """

    def __init__(self, universe, matrices, num_cols):
        self._universe = universe
        self._num_cols = num_cols
        self._matrices = {}

        missing = [name for name in universe.names if name not in matrices]
        if missing:
            raise ValidationError("Missing matrix for variable(s) %s" % ", ".join(missing))

        for name in universe.names:
            rows = [list(row) for row in matrices[name]]
            for row in rows:
                if len(row) != num_cols:
                    raise ValidationError("Matrix of %s has a row of %i columns, expected %i"
                                          % (name, len(row), num_cols))
                if not all(isinstance(value, int) for value in row):
                    raise ValidationError("Matrix of %s has a non integer entry" % name)
            self._matrices[name] = rows

    @property
    def universe(self):
        return self._universe

    @property
    def num_cols(self):
        return self._num_cols

    def matrix(self, name):
        return [list(row) for row in self._matrices[name]]

    def stacked(self, mask):
        """
        The rows of all variables in the subset on top of each other
        """
        result = []
        for name in self._universe.names_of(mask):
            result.extend(list(row) for row in self._matrices[name])
        return result

    def __eq__(self, other):
        return (isinstance(other, SubspaceRepresentation) and
                self._universe == other.universe and
                self._num_cols == other.num_cols and
                all(self._matrices[name] == other.matrix(name) for name in self._universe.names))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "SubspaceRepresentation(%s, %i columns)" % (self._universe, self._num_cols)


def ranks_from_matrices(representation):
    """
    The rank vector over the rationals
    """
    return RankVector.from_function(representation.universe,
                                    lambda mask: exact_rank(representation.stacked(mask)))


def ranks_mod_p(representation, prime):
    """
    The rank vector over the field with prime elements
    """
    check_prime(prime)
    return RankVector.from_function(representation.universe,
                                    lambda mask: rank_mod_p(representation.stacked(mask), prime))


def all_fields_check(representation):
    """
    True when every stacked matrix keeps its rational rank over every field,
    that is when all its nonzero elementary divisors are one
    """
    for mask in representation.universe.masks():
        divisors = elementary_divisors(representation.stacked(mask))
        if any(divisor != 1 for divisor in divisors):
            LOGGER.debug("Stacked matrix of %s has elementary divisors %s",
                         ",".join(representation.universe.names_of(mask)), divisors)
            return False
    return True


def row_basis(rows, prime=None):
    """
    A maximal independent subset of the rows, earliest rows first
    """
    result = []
    rank = 0
    for row in rows:
        candidate = result + [row]
        new_rank = exact_rank(candidate) if prime is None else rank_mod_p(candidate, prime)
        if new_rank > rank:
            result = candidate
            rank = new_rank
    return result


def intersection_basis(first, second, num_cols, prime=None):
    """
    Basis of the intersection of the row spaces of two matrices, over the
    rationals or over the field with prime elements
    """
    first = row_basis(first, prime)
    second = row_basis(second, prime)
    if not first or not second:
        return []

    if prime is None:
        system = [[row[col] for row in first] + [-row[col] for row in second] for col in range(num_cols)]
        kernel = nullspace(system, len(first) + len(second))
    else:
        system = [[row[col] % prime for row in first] + [-row[col] % prime for row in second]
                  for col in range(num_cols)]
        kernel = nullspace_mod_p(system, len(first) + len(second), prime)

    result = []
    for combination in kernel:
        vector = [sum(combination[idx] * first[idx][col] for idx in range(len(first)))
                  for col in range(num_cols)]
        if prime is not None:
            vector = [value % prime for value in vector]
        result.append(vector)
    return result


class RandomPoints(object):
    """
    Random points of a span over the field with prime elements
    """

    def __init__(self, prime, seed):
        self._prime = prime
        self._rng = np.random.default_rng(seed)

    def point(self, spanning):
        coefficients = [int(value) for value in self._rng.integers(1, self._prime, size=len(spanning))]
        return [sum(coefficient * row[col] for coefficient, row in zip(coefficients, spanning)) % self._prime
                for col in range(len(spanning[0]))]

    def points(self, spanning, count):
        return [self.point(spanning) for _ in range(count)]
