# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Rank vectors, the 2^n - 1 joint ranks of all nonempty variable subsets
"""

from fractions import Fraction
from linrank.universe import Permutation
from linrank.exceptions import RankVectorError, UniverseError


class RankVector(object):
    """
    Nonnegative rationals in binary subset order, the empty set has rank zero
    """

    def __init__(self, universe, coords):
        coords = tuple(Fraction(value) for value in coords)
        if len(coords) != universe.num_coords:
            raise RankVectorError("Expected %i coordinates for %i variables, got %i"
                                  % (universe.num_coords, len(universe), len(coords)))

        for mask, value in enumerate(coords, 1):
            if value < 0:
                raise RankVectorError("Negative rank %s for %s"
                                      % (value, ",".join(universe.names_of(mask))))

        self._universe = universe
        self._coords = coords

    @classmethod
    def zero(cls, universe):
        return cls(universe, [0] * universe.num_coords)

    @classmethod
    def from_function(cls, universe, func):
        """
        Build from func(mask) evaluated on every nonempty mask
        """
        return cls(universe, [func(mask) for mask in universe.masks()])

    @property
    def universe(self):
        return self._universe

    @property
    def coords(self):
        return self._coords

    def value(self, mask):
        if mask == 0:
            return Fraction(0)
        return self._coords[mask - 1]

    def with_value(self, mask, value):
        coords = list(self._coords)
        coords[mask - 1] = value
        return RankVector(self._universe, coords)

    def _check_universe(self, other):
        if len(self._universe) != len(other.universe):
            raise UniverseError("Rank vectors over %i and %i variables"
                                % (len(self._universe), len(other.universe)))

    def __add__(self, other):
        self._check_universe(other)
        return RankVector(self._universe,
                          [mine + theirs for mine, theirs in zip(self._coords, other.coords)])

    def scale(self, factor):
        return RankVector(self._universe, [factor * value for value in self._coords])

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def permuted(self, permutation):
        """
        The rank of subset m is moved to the image subset of m
        """
        permutation.check_size(self._universe)
        coords = [None] * len(self._coords)
        for mask, value in enumerate(self._coords, 1):
            coords[permutation.apply_mask(mask) - 1] = value
        return RankVector(self._universe, coords)

    def orbit_canonical(self):
        return orbit_canonical(self)

    def __eq__(self, other):
        return (isinstance(other, RankVector) and
                len(self._universe) == len(other.universe) and
                self._coords == other.coords)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._coords)

    def __str__(self):
        return " ".join(str(value) for value in self._coords)

    def __repr__(self):
        return "RankVector(%s)" % str(self)


def orbit_canonical(vector):
    """
    Lexicographically least image of the vector under all variable permutations
    """
    best = vector.coords
    for permutation in Permutation.all(len(vector.universe)):
        candidate = vector.permuted(permutation).coords
        if candidate < best:
            best = candidate
    return RankVector(vector.universe, best)
