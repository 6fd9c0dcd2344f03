# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Variable universes, variable sets and permutations of variables

A subset of the universe is stored as a bit mask where variable i is bit i.
The joint entropy coordinate of the subset with mask m is at index m - 1,
which is the usual binary order A, B, AB, C, AC, BC, ABC, ...
"""

import itertools
import re
from linrank.exceptions import UniverseError


def _natural_key(name):
    return [int(part) if part.isdigit() else part
            for part in re.split(r"(\d+)", name)]


class VarUniverse(object):
    """
    An ordered list of distinct variable names
    """
    MAX_SIZE = 26

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise UniverseError("A universe needs at least one variable")

        duplicates = sorted(set(name for name in names if names.count(name) > 1))
        if duplicates:
            raise UniverseError("Duplicate variable(s) %s" % ", ".join(duplicates))

        if len(names) > self.MAX_SIZE:
            raise UniverseError("Universe of %i variables exceeds the limit of %i"
                                % (len(names), self.MAX_SIZE))

        self._names = names
        self._index = dict((name, idx) for idx, name in enumerate(names))

    @classmethod
    def letters(cls, num_variables):
        """
        The universe A, B, C, ... of num_variables variables
        """
        if not 1 <= num_variables <= cls.MAX_SIZE:
            raise UniverseError("Cannot create a universe of %i letters" % num_variables)
        return cls(chr(ord('A') + idx) for idx in range(num_variables))

    @classmethod
    def from_names(cls, names):
        """
        The universe of the distinct names in natural sort order, C2 before C10
        """
        return cls(sorted(set(names), key=_natural_key))

    @property
    def names(self):
        return self._names

    def __len__(self):
        return len(self._names)

    def __iter__(self):
        return iter(self._names)

    def __contains__(self, name):
        return name in self._index

    @property
    def full_mask(self):
        return (1 << len(self._names)) - 1

    @property
    def num_coords(self):
        return self.full_mask

    def masks(self):
        """
        All nonempty subset masks in binary order
        """
        return range(1, self.full_mask + 1)

    def index_of(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UniverseError("Unknown variable %s, expected one of %s" % (name, ", ".join(self._names)))

    def mask_of(self, names):
        mask = 0
        for name in names:
            mask |= 1 << self.index_of(name)
        return mask

    def names_of(self, mask):
        self.check_mask(mask)
        return [name for idx, name in enumerate(self._names) if mask & (1 << idx)]

    def check_mask(self, mask):
        if not 0 <= mask <= self.full_mask:
            raise UniverseError("Subset mask %i is outside a universe of %i variables"
                                % (mask, len(self._names)))

    def varset(self, names=()):
        if isinstance(names, str):
            names = [names]
        return VarSet(self, self.mask_of(names))

    def extend(self, names):
        """
        Append auxiliary variables, the masks of the existing variables are unchanged
        """
        return VarUniverse(self._names + tuple(names))

    def is_prefix_of(self, other):
        return other.names[:len(self._names)] == self._names

    def __eq__(self, other):
        return isinstance(other, VarUniverse) and self._names == other.names

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._names)

    def __repr__(self):
        return "VarUniverse(%r)" % (list(self._names),)

    def __str__(self):
        return " ".join(self._names)


class VarSet(object):
    """
    A subset of a universe such as the joint variable (C,D)
    """

    def __init__(self, universe, mask):
        universe.check_mask(mask)
        self._universe = universe
        self._mask = mask

    @property
    def universe(self):
        return self._universe

    @property
    def mask(self):
        return self._mask

    @property
    def names(self):
        return self._universe.names_of(self._mask)

    def is_empty(self):
        return self._mask == 0

    def _check_universe(self, other):
        if self._universe != other.universe:
            raise UniverseError("Cannot combine variable sets from different universes")

    def __or__(self, other):
        self._check_universe(other)
        return VarSet(self._universe, self._mask | other.mask)

    def __and__(self, other):
        self._check_universe(other)
        return VarSet(self._universe, self._mask & other.mask)

    def __len__(self):
        return bin(self._mask).count("1")

    def __eq__(self, other):
        return (isinstance(other, VarSet) and
                self._universe == other.universe and
                self._mask == other.mask)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._universe, self._mask))

    def __str__(self):
        return ",".join(self.names)

    def __repr__(self):
        return "VarSet(%s)" % str(self)


class Permutation(object):
    """
    A bijection of variable indices, images[i] is where variable i is sent
    """

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise UniverseError("%r is not a permutation of 0..%i" % (images, len(images) - 1))
        self._images = images

    @classmethod
    def identity(cls, size):
        return cls(range(size))

    @classmethod
    def swap(cls, size, first, second):
        images = list(range(size))
        images[first], images[second] = second, first
        return cls(images)

    @classmethod
    def all(cls, size):
        """
        All size! permutations, the identity first
        """
        for images in itertools.permutations(range(size)):
            yield cls(images)

    @classmethod
    def from_names(cls, universe, targets):
        """
        The permutation sending universe.names[i] to targets[i]
        """
        return cls(universe.index_of(name) for name in targets)

    @property
    def images(self):
        return self._images

    def __len__(self):
        return len(self._images)

    def __call__(self, index):
        return self._images[index]

    def apply_mask(self, mask):
        result = 0
        for idx, image in enumerate(self._images):
            if mask & (1 << idx):
                result |= 1 << image
        return result

    def inverse(self):
        images = [0] * len(self._images)
        for idx, image in enumerate(self._images):
            images[image] = idx
        return Permutation(images)

    def compose(self, other):
        """
        self after other
        """
        return Permutation(self._images[image] for image in other.images)

    def is_identity(self):
        return self._images == tuple(range(len(self._images)))

    def check_size(self, universe):
        if len(self._images) != len(universe):
            raise UniverseError("Permutation of %i variables applied to a universe of %i"
                                % (len(self._images), len(universe)))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._images == other.images

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return "Permutation(%r)" % (list(self._images),)
