# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Combinatorial search for a linear representation of a rank vector

Variables are placed one at a time and every variable one basis vector at
a time.  While placing a variable the state is a pair of rows over the sums
of the already placed variables: the dimension of every sum and the
deficit, how much the new variable still adds to the sum.  A new vector is
taken in general position in a sum, or in the intersection of two sums,
and everything is divided by it.  Only dimensions are tracked, actual
vectors are chosen afterwards by realize_trace.
"""

import logging
from itertools import permutations, islice
from math import factorial
from linrank.subset_rules import (YES, UNKNOWN, cap, membership_decisions, sum_membership)
from linrank.polymatroid import validate_polymatroid
from linrank.representation import SubspaceRepresentation, RandomPoints, row_basis, intersection_basis
from linrank.linalg import check_prime
from linrank.exceptions import ValidationError

LOGGER = logging.getLogger(__name__)

DEFAULT_PRIME = 2147483647
MAX_DEFAULT_ORDERS = 720


class SearchState(object):
    """
    The dims and deficit rows while placing one variable
    """

    def __init__(self, placed, variable, dims, deficits):
        self.placed = list(placed)
        self.variable = variable
        self.dims = list(dims)
        self.deficits = list(deficits)

    @classmethod
    def initial(cls, vector, placed, variable):
        """
        Arrays before any vector of the variable is chosen
        """
        universe = vector.universe
        extra = universe.mask_of([variable])
        dims = []
        deficits = []
        for mask in range(1 << len(placed)):
            names = [name for idx, name in enumerate(placed) if mask & (1 << idx)]
            whole = universe.mask_of(names)
            dims.append(_value(vector, whole))
            deficits.append(_value(vector, whole | extra) - dims[-1])
        return cls(placed, variable, dims, deficits)

    def is_complete(self):
        return self.deficits[0] == 0

    def forced_sum(self):
        """
        The first sum the variable adds less to than its own dimension, it
        must share a vector with it
        """
        for mask in range(1, len(self.deficits)):
            if self.deficits[mask] < self.deficits[0]:
                return mask
        return None

    def deficits_after(self, member):
        return [deficit - (1 - inside) for deficit, inside in zip(self.deficits, member)]

    def quotient(self, member):
        """
        The state after dividing by a chosen vector with the given membership row
        """
        return SearchState(self.placed, self.variable,
                           [dim - inside for dim, inside in zip(self.dims, member)],
                           self.deficits_after(member))

    def __eq__(self, other):
        return (isinstance(other, SearchState) and
                (self.placed, self.variable, self.dims, self.deficits) ==
                (other.placed, other.variable, other.dims, other.deficits))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "SearchState(%s after %s)" % (self.variable, ",".join(self.placed))


def _value(vector, mask):
    return 0 if mask == 0 else int(vector.value(mask))


def format_sum(mask, placed):
    return "+".join(name for idx, name in enumerate(placed) if mask & (1 << idx))


def format_target(target, placed):
    """
    fresh, a sum such as A+B or an intersection such as (A+B)&(C+D)
    """
    if not target:
        return "fresh"
    if len(target) == 1:
        return format_sum(target[0], placed)
    return "&".join("(%s)" % format_sum(mask, placed) for mask in target)


class TraceStep(object):
    """
    One chosen vector: where it was taken, its membership row, the deficits
    of a rejected plain attempt and the arrays after the quotient
    """

    def __init__(self, target, member, dims, deficits, rejected=None):
        self.target = tuple(target)
        self.member = list(member)
        self.dims = list(dims)
        self.deficits = list(deficits)
        self.rejected = None if rejected is None else list(rejected)

    def __eq__(self, other):
        return (isinstance(other, TraceStep) and
                (self.target, self.member, self.dims, self.deficits, self.rejected) ==
                (other.target, other.member, other.dims, other.deficits, other.rejected))

    def __ne__(self, other):
        return not self == other


class Placement(object):
    """
    The initial arrays of one variable and the steps placing it
    """

    def __init__(self, variable, placed, dims, deficits, steps=()):
        self.variable = variable
        self.placed = list(placed)
        self.dims = list(dims)
        self.deficits = list(deficits)
        self.steps = list(steps)

    def initial_state(self):
        return SearchState(self.placed, self.variable, self.dims, self.deficits)

    def __eq__(self, other):
        return (isinstance(other, Placement) and
                (self.variable, self.placed, self.dims, self.deficits, self.steps) ==
                (other.variable, other.placed, other.dims, other.deficits, other.steps))

    def __ne__(self, other):
        return not self == other


class SearchTrace(object):
    """
    The placements of a successful search in variable order
    """

    def __init__(self, universe, order, placements=()):
        self.universe = universe
        self.order = list(order)
        self.placements = list(placements)

    def num_steps(self):
        return sum(len(placement.steps) for placement in self.placements)

    def __eq__(self, other):
        return (isinstance(other, SearchTrace) and
                (self.universe, self.order, self.placements) ==
                (other.universe, other.order, other.placements))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "SearchTrace(%s, %i steps)" % (" ".join(self.order), self.num_steps())


class Stuck(object):
    """
    A needed subspace inclusion is not determined by the dimensions
    """

    def __init__(self, reason):
        self.reason = reason

    def __repr__(self):
        return "Stuck(%s)" % self.reason


class Contradiction(object):
    """
    Every tried choice drives a deficit negative
    """

    def __init__(self, reason):
        self.reason = reason

    def __repr__(self):
        return "Contradiction(%s)" % self.reason


def _first_negative(deficits):
    for mask, deficit in enumerate(deficits):
        if deficit < 0:
            return mask
    return None


def choose_and_quotient(state):
    """
    Choose the next vector of the variable and divide by it

    Returns (state, step), a Stuck or a Contradiction.  A complete state is
    returned unchanged with no step.
    """
    if state.is_complete():
        return state, None

    forced = state.forced_sum()
    if forced is None:
        member = [0] * len(state.dims)
        new_state = state.quotient(member)
        return new_state, TraceStep((), member, new_state.dims, new_state.deficits)

    member = sum_membership(forced, state.dims)
    rejected = state.deficits_after(member)
    negative = _first_negative(rejected)
    if negative is None:
        new_state = state.quotient(member)
        return new_state, TraceStep((forced,), member, new_state.dims, new_state.deficits)

    target = (forced, negative)
    description = format_target(target, state.placed)
    if cap(forced, negative, state.dims) == 0:
        return Contradiction("%s of %s is the zero space" % (description, state.variable))

    decisions = membership_decisions(forced, negative, state.dims)
    if UNKNOWN in decisions:
        undecided = decisions.index(UNKNOWN)
        return Stuck("cannot decide whether %s is in %s while placing %s"
                     % (description, format_sum(undecided, state.placed) or "0", state.variable))

    member = [int(decision == YES) for decision in decisions]
    if _first_negative(state.deficits_after(member)) is not None:
        return Contradiction("a vector of %s in %s leaves a negative deficit" % (state.variable, description))

    new_state = state.quotient(member)
    return new_state, TraceStep(target, member, new_state.dims, new_state.deficits, rejected)


def place_variable(vector, placed, variable):
    """
    A Placement of the variable after the placed ones, or a Stuck or Contradiction
    """
    state = SearchState.initial(vector, placed, variable)
    placement = Placement(variable, placed, state.dims, state.deficits)
    while not state.is_complete():
        result = choose_and_quotient(state)
        if isinstance(result, (Stuck, Contradiction)):
            return result
        state, step = result
        placement.steps.append(step)
    return placement


class SearchSuccess(object):
    exit_code = 0
    status = "represented"

    def __init__(self, trace):
        self.trace = trace

    def __repr__(self):
        return "SearchSuccess(%r)" % self.trace


class SearchFailure(object):
    """
    Every order ended in a contradiction
    """
    exit_code = 1
    status = "failed"

    def __init__(self, reasons):
        self.reasons = list(reasons)

    def __repr__(self):
        return "SearchFailure(%i orders)" % len(self.reasons)


class SearchUnknown(object):
    """
    No order succeeded and some order got stuck or was not tried
    """
    exit_code = 2
    status = "unknown"

    def __init__(self, reasons):
        self.reasons = list(reasons)

    def __repr__(self):
        return "SearchUnknown(%i orders)" % len(self.reasons)


def _check_vector(vector):
    violation = validate_polymatroid(vector)
    if violation is not None:
        raise ValidationError("Not a polymatroid: %s" % violation, [violation])
    if any(value.denominator != 1 for value in vector.coords):
        raise ValidationError("The representation search needs integer ranks")


def search_order(vector, order):
    """
    A SearchTrace for one variable order, or the Stuck or Contradiction ending it
    """
    trace = SearchTrace(vector.universe, order)
    for idx, variable in enumerate(order):
        result = place_variable(vector, order[:idx], variable)
        if isinstance(result, (Stuck, Contradiction)):
            return result
        trace.placements.append(result)
    return trace


def search_representation(vector, max_orders=None):
    """
    Try the variable orders in turn, the identity order first

    All n! orders are tried for up to six variables, beyond that at most
    MAX_DEFAULT_ORDERS unless max_orders says otherwise.
    """
    _check_vector(vector)
    names = vector.universe.names
    total = factorial(len(names))
    if max_orders is None:
        max_orders = total if len(names) <= 6 else MAX_DEFAULT_ORDERS
    max_orders = min(max_orders, total)

    reasons = []
    stuck = False
    for order in islice(permutations(names), max_orders):
        result = search_order(vector, list(order))
        if isinstance(result, SearchTrace):
            LOGGER.debug("Order %s succeeded after %i failed order(s)", " ".join(order), len(reasons))
            return SearchSuccess(result)
        LOGGER.debug("Order %s: %r", " ".join(order), result)
        stuck = stuck or isinstance(result, Stuck)
        reasons.append((list(order), result))

    if stuck or max_orders < total:
        return SearchUnknown(reasons)
    return SearchFailure(reasons)


def replay_trace(trace, vector):
    """
    Redo the subtractions of the trace and return every state, raises
    ValidationError when the recorded arrays disagree
    """
    states = []
    for placement in trace.placements:
        state = SearchState.initial(vector, placement.placed, placement.variable)
        if state != placement.initial_state():
            raise ValidationError("Initial arrays of %s do not match the rank vector" % placement.variable)
        states.append(state)
        for number, step in enumerate(placement.steps, 1):
            if step.rejected is not None and step.rejected != state.deficits_after(
                    sum_membership(step.target[0], state.dims)):
                raise ValidationError("Rejected row of step %i of %s does not match"
                                      % (number, placement.variable))
            state = state.quotient(step.member)
            if (state.dims, state.deficits) != (step.dims, step.deficits):
                raise ValidationError("Step %i of %s does not reproduce the recorded arrays"
                                      % (number, placement.variable))
            states.append(state)
        if any(deficit != 0 for deficit in state.deficits):
            raise ValidationError("Placement of %s ends with nonzero deficits" % placement.variable)
    return states


def _unit_rows(num_cols):
    return [[int(col == idx) for col in range(num_cols)] for idx in range(num_cols)]


def realize_trace(trace, vector, prime=DEFAULT_PRIME, seed=0):
    """
    Follow the trace with random vectors over the field with prime elements

    The result is checked by the caller, a bad draw may lose general position.
    """
    check_prime(prime)
    universe = vector.universe
    num_cols = _value(vector, universe.full_mask)
    source = RandomPoints(prime, seed)
    matrices = dict((name, []) for name in universe.names)

    for placement in trace.placements:
        chosen = []
        for step in placement.steps:
            spans = [sum((matrices[name] for idx, name in enumerate(placement.placed) if mask & (1 << idx)),
                         []) + chosen
                     for mask in step.target]
            if not spans:
                spanning = _unit_rows(num_cols)
            elif len(spans) == 1:
                spanning = row_basis(spans[0], prime)
            else:
                spanning = intersection_basis(spans[0], spans[1], num_cols, prime)
            if not spanning:
                raise ValidationError("Step of %s has nothing to choose from" % placement.variable)
            chosen.append(source.point(spanning))
        matrices[placement.variable] = chosen

    return SubspaceRepresentation(universe, matrices, num_cols)
