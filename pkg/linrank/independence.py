# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Rank vectors showing that the independence family needs all its variables

On the universe A, B, C1, ..., Cn the vector v violates the family
inequality while every w vector differs from v in one coordinate and is
representable.  The representations live in a 2n dimensional space with
basis x1..xn, y1..yn where Ci is spanned by xi and yi.
"""

import logging
from sympy import nextprime
from linrank.universe import VarUniverse
from linrank.rank_vector import RankVector
from linrank.representation import SubspaceRepresentation, RandomPoints, ranks_mod_p
from linrank.exceptions import FamilyRangeError, RetryBudgetExhausted, ValidationError

LOGGER = logging.getLogger(__name__)

DEFAULT_PRIME = 2147483647
RETRY_BUDGET = 32


def independence_universe(num):
    return VarUniverse(["A", "B"] + ["C%i" % idx for idx in range(1, num + 1)])


class IndependenceFamily(object):
    """
    The vectors v, wA, wB and w1..wn
    """

    def __init__(self, num, v, w_a, w_b, w_i):
        self.num = num
        self.v = v
        self.w_a = w_a
        self.w_b = w_b
        self.w_i = list(w_i)

    @property
    def universe(self):
        return self.v.universe

    def named(self):
        """
        The w vectors by name, wA, wB, w1, ..., wn
        """
        result = [("wA", self.w_a), ("wB", self.w_b)]
        result.extend(("w%i" % idx, vector) for idx, vector in enumerate(self.w_i, 1))
        return result

    def get(self, which):
        for name, vector in self.named():
            if name == which:
                return vector
        raise ValidationError("Unknown w vector %s, expected one of %s"
                              % (which, ", ".join(name for name, _ in self.named())))


def _v_value(num, mask):
    has_a = bool(mask & 1)
    has_b = bool(mask & 2)
    size = bin(mask >> 2).count("1")
    if has_a and has_b:
        return min(2 * num - 1 + size, 2 * num)
    if has_b:
        return min(2 * num - 2 + size, 2 * num)
    if has_a:
        return num + size
    return 2 * size


def independence_vectors(num):
    if num < 2:
        raise FamilyRangeError("The independence vectors need n >= 2, got %i" % num)

    universe = independence_universe(num)
    v = RankVector.from_function(universe, lambda mask: _v_value(num, mask))
    w_a = v.with_value(universe.mask_of(["A"]), num - 1)
    w_b = v.with_value(universe.mask_of(["B"]), 2 * num - 3)
    w_i = [v.with_value(universe.mask_of(["B", "C%i" % idx]), 2 * num)
           for idx in range(1, num + 1)]
    return IndependenceFamily(num, v, w_a, w_b, w_i)


def _unit(num_cols, idx):
    return [int(col == idx) for col in range(num_cols)]


def _matrices(num, which, source):
    dim = 2 * num
    x_rows = [_unit(dim, idx) for idx in range(num)]
    y_rows = [_unit(dim, num + idx) for idx in range(num)]
    all_rows = x_rows + y_rows

    matrices = dict(("C%i" % (idx + 1), [x_rows[idx], y_rows[idx]]) for idx in range(num))

    if which == "wA":
        z_rows = source.points(x_rows, num - 1)
        matrices["A"] = z_rows
        matrices["B"] = z_rows[:num - 2] + y_rows
    elif which == "wB":
        matrices["A"] = x_rows
        matrices["B"] = source.points(x_rows, num - 2) + source.points(all_rows, num - 1)
    else:
        skipped = int(which[1:]) - 1
        matrices["A"] = x_rows
        matrices["B"] = ([row for idx, row in enumerate(x_rows) if idx != skipped] +
                         source.points(all_rows, num - 1))
    return matrices


def random_w_representation(num, which, seed, prime=None):
    """
    Matrices over the field with prime elements whose rank vector is the w vector named which
    """
    family = independence_vectors(num)
    target = family.get(which)

    if prime is None:
        # Every construction mentions at most 4n points
        prime = max(DEFAULT_PRIME, nextprime(2 ** (4 * num)))

    source = RandomPoints(prime, seed)
    universe = family.universe
    for attempt in range(RETRY_BUDGET):
        representation = SubspaceRepresentation(universe, _matrices(num, which, source), 2 * num)
        if ranks_mod_p(representation, prime) == target:
            LOGGER.debug("Represented %s for n=%i after %i draw(s)", which, num, attempt + 1)
            return representation
        LOGGER.debug("Draw %i for %s is not in general position", attempt + 1, which)

    raise RetryBudgetExhausted("No representation of %s for n=%i within %i draws with seed %s"
                               % (which, num, RETRY_BUDGET, seed))
