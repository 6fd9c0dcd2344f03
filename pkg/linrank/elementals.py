# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
The elemental Shannon inequalities

H(X_i | rest) >= 0 for every variable, then I(X_i;X_j|X_K) >= 0 for every
pair i < j and every subset K of the other variables.
"""

from functools import lru_cache
from linrank.universe import VarSet
from linrank.expression import LinearInequality, InfoTerm, expand_info_term


class ElementalInequality(LinearInequality):
    """
    An elemental inequality with its position in the canonical list
    """

    def __init__(self, term, index, first, second, condition):
        LinearInequality.__init__(self, expand_info_term(term), "%s >= 0" % term)
        self.term = term
        self.index = index
        self.first = first
        self.second = second
        self.condition = condition

    def is_conditional_entropy(self):
        return self.second is None


def num_elementals(num_variables):
    pairs = num_variables * (num_variables - 1) // 2
    return num_variables + pairs * (1 << max(num_variables - 2, 0))


@lru_cache(maxsize=None)
def elemental_inequalities(universe):
    """
    The canonical list of elemental inequalities of the universe
    """
    size = len(universe)
    full = universe.full_mask
    result = []

    for first in range(size):
        rest = full & ~(1 << first)
        term = InfoTerm.conditional(VarSet(universe, 1 << first), VarSet(universe, rest))
        result.append(ElementalInequality(term, len(result), first, None, rest))

    for first in range(size):
        for second in range(first + 1, size):
            others = full & ~((1 << first) | (1 << second))
            for condition in range(full + 1):
                if condition & ~others:
                    continue
                term = InfoTerm.mutual(VarSet(universe, 1 << first),
                                       VarSet(universe, 1 << second),
                                       VarSet(universe, condition))
                result.append(ElementalInequality(term, len(result), first, second, condition))

    assert len(result) == num_elementals(size)
    return tuple(result)
