# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Deciding R & S <= T for sum subspaces from their dimensions alone

A sum subspace is a bit mask over the placed variables and dims[mask] is
its current dimension, dims[0] is the zero space.  The dimension of an
intersection follows from the sums, dim(X & Y) = dim X + dim Y - dim(X + Y).
"""

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


def cap(first, second, dims):
    """
    Dimension of the intersection of two sums
    """
    return dims[first] + dims[second] - dims[first | second]


def contains(outer, inner, dims):
    """
    True when the sum inner is a subspace of the sum outer
    """
    return dims[inner | outer] == dims[outer]


def _three_equal(first, second, target, dims):
    return cap(first, second, dims) == cap(first, target, dims) == cap(first, second | target, dims)


def _four_equal(first, second, target, dims):
    return (cap(first, target, dims) == cap(second, target, dims) ==
            cap(first | second, target, dims) == cap(first, second, dims))


def _smaller_than_pair(first, second, target, dims):
    return cap(first, target, dims) < cap(first, second, dims)


def _nominal_escape(first, second, target, dims):
    """
    R & T is too small to hold (R &* T) + (R & S)
    """
    nominal = first & target
    return cap(first, target, dims) < cap(first, nominal | second, dims)


def _direct(first, second, target, dims):
    """
    The rules that only look at the one target, each rule tried for (R, S) then (S, R)
    """
    pairs = ((first, second), (second, first))
    if any(contains(target, one, dims) for one, _ in pairs):
        return YES
    if any(_three_equal(one, other, target, dims) for one, other in pairs):
        return YES
    if _four_equal(first, second, target, dims):
        return YES
    if any(_smaller_than_pair(one, other, target, dims) for one, other in pairs):
        return NO
    if not contains(target, first & second, dims):
        return NO
    if any(_nominal_escape(one, other, target, dims) for one, other in pairs):
        return NO
    return UNKNOWN


def _propagate(decisions, dims):
    """
    Push yes up to larger sums and no down to smaller sums
    """
    changed = True
    while changed:
        changed = False
        for target, decision in enumerate(decisions):
            if decision != UNKNOWN:
                continue
            for other, known in enumerate(decisions):
                if known == YES and contains(target, other, dims):
                    decisions[target] = YES
                elif known == NO and contains(other, target, dims):
                    decisions[target] = NO
                else:
                    continue
                changed = True
                break


class _Split(object):
    """
    R & S = ((R -* S) & (S -* R)) + (R &* S) when the nominal parts only meet in zero
    """

    def __init__(self, first, second, dims):
        self.common = first & second
        self.only_first = first & ~second
        self.only_second = second & ~first
        self.dims = dims
        self.applies = (self.common != 0 and
                        cap(self.only_first | self.only_second, self.common, dims) == 0)
        self._inner = None

    def decision(self, target):
        if not self.applies or not contains(target, self.common, self.dims):
            return UNKNOWN
        if cap(self.only_first, self.only_second, self.dims) == 0:
            return YES
        if self._inner is None:
            self._inner = membership_decisions(self.only_first, self.only_second, self.dims)
        return YES if self._inner[target] == YES else UNKNOWN


def membership_decisions(first, second, dims):
    """
    Decision of R & S <= T for every sum T
    """
    decisions = [_direct(first, second, target, dims) for target in range(len(dims))]
    split = _Split(first, second, dims)
    changed = True
    while changed:
        _propagate(decisions, dims)
        changed = False
        for target, decision in enumerate(decisions):
            if decision == UNKNOWN:
                decisions[target] = split.decision(target)
                changed = changed or decisions[target] != UNKNOWN
    return decisions


def subset_decision(first, second, target, dims):
    """
    yes, no or unknown for R & S <= T
    """
    return membership_decisions(first, second, dims)[target]


def sum_membership(first, dims):
    """
    Membership of a vector in general position in the sum R, it lies in T exactly when R <= T
    """
    return [int(contains(target, first, dims)) for target in range(len(dims))]
