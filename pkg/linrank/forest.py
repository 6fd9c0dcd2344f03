# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Labelled binary trees and forests that generate linear rank inequalities

Every node is labelled with an information term I(x;y|z).  Two variable
sets A and B are special.  On each side of a node the side variable set
must be resolved in one of three ways:

  (a) it is A or B and the side is empty
  (b) the child on that side is labelled I(r;s|x)
  (c) the pointer on that side goes to another node labelled I(r;s|t)
      with x = r,s,t

No node is the destination of more than one pointer and the roots have an
empty condition.  A forest with m roots then gives

  m I(A;B) <= sum of all node labels

whenever A and B have a common information.
"""

import logging
import numpy as np
from linrank.universe import VarUniverse, VarSet
from linrank.expression import InfoTerm, LinearInequality, EntropyExpr, expand_info_term
from linrank.graph import LinkGraph, CycleException
from linrank.exceptions import ValidationError

LOGGER = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"
SIDES = (LEFT, RIGHT)


class ForestViolation(object):
    """
    A node breaking a clause, node is None for whole forest problems
    """

    def __init__(self, node, clause, message):
        self.node = node
        self.clause = clause
        self.message = message

    def __eq__(self, other):
        return (isinstance(other, ForestViolation) and
                (self.node, self.clause) == (other.node, other.clause))

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        if self.node is None:
            return "%s: %s" % (self.clause, self.message)
        return "node %s %s: %s" % (self.node, self.clause, self.message)

    def __repr__(self):
        return "ForestViolation(%s)" % str(self)


def _clause(side, letter):
    return "(%s)" % letter if side == LEFT else "(%s')" % letter


def _side_set(term, side):
    return term.x if side == LEFT else term.y


class ForestSpec(object):
    """
    A labelled binary forest with optional left and right pointers

    Nodes are numbered 1, 2, ... in insertion order.
    """

    def __init__(self, universe, special_a, special_b):
        self._universe = universe
        self._special_a = special_a
        self._special_b = special_b
        self._labels = {}
        self._children = {LEFT: {}, RIGHT: {}}
        self._pointers = {LEFT: {}, RIGHT: {}}

    @property
    def universe(self):
        return self._universe

    @property
    def special_a(self):
        return self._special_a

    @property
    def special_b(self):
        return self._special_b

    @property
    def node_ids(self):
        return sorted(self._labels)

    def __len__(self):
        return len(self._labels)

    def label(self, node):
        return self._labels[node]

    def add_node(self, term, node=None):
        """
        Add a node returning its id, the next free id by default
        """
        if term.universe != self._universe:
            raise ValidationError("Label %s is not over the forest universe %s" % (term, self._universe))
        if not term.is_mutual():
            raise ValidationError("Label %s is not a mutual information term" % term)
        if node is None:
            node = len(self._labels) + 1
        if node in self._labels:
            raise ValidationError("Duplicate node %s" % node)
        self._labels[node] = term
        return node

    def relabel(self, node, term):
        self._check_node(node)
        if term.universe != self._universe or not term.is_mutual():
            raise ValidationError("Invalid label %s" % term)
        self._labels[node] = term

    def _check_node(self, node):
        if node not in self._labels:
            raise ValidationError("Unknown node %s" % node)

    def set_child(self, side, parent, child):
        self._check_node(parent)
        self._check_node(child)
        if parent in self._children[side]:
            raise ValidationError("Node %s already has a %s child" % (parent, side))
        self._children[side][parent] = child

    def set_pointer(self, side, source, destination):
        self._check_node(source)
        self._check_node(destination)
        if source in self._pointers[side]:
            raise ValidationError("Node %s already has a %s pointer" % (source, side))
        self._pointers[side][source] = destination

    def child(self, side, node):
        return self._children[side].get(node)

    def pointer(self, side, node):
        return self._pointers[side].get(node)

    def pointers(self):
        """
        All pointers as (side, source, destination)
        """
        return [(side, source, destination)
                for side in SIDES
                for source, destination in sorted(self._pointers[side].items())]

    def child_graph(self):
        graph = LinkGraph()
        for node in self.node_ids:
            graph.add_node(node)
        for side in SIDES:
            for parent, child in self._children[side].items():
                graph.add_edge(parent, child)
        return graph

    def roots(self):
        return self.child_graph().sources()

    def label_sum(self):
        result = EntropyExpr.zero(self._universe)
        for node in self.node_ids:
            result = result + expand_info_term(self._labels[node])
        return result

    def __eq__(self, other):
        return (isinstance(other, ForestSpec) and
                self._universe == other.universe and
                (self._special_a, self._special_b) == (other.special_a, other.special_b) and
                self.node_ids == other.node_ids and
                all(self._labels[node] == other.label(node) for node in self.node_ids) and
                all(self.child(side, node) == other.child(side, node) and
                    self.pointer(side, node) == other.pointer(side, node)
                    for side in SIDES for node in self.node_ids))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "ForestSpec(%i nodes, A=%s, B=%s)" % (len(self), self._special_a, self._special_b)


def structure_violations(spec):
    """
    Violations of the forest shape: cycles, shared children, shared
    pointer destinations and roots with a condition
    """
    violations = []
    graph = spec.child_graph()
    for node in spec.node_ids:
        if len(graph.parents(node)) > 1:
            violations.append(ForestViolation(node, "forest", "node has %i parents" % len(graph.parents(node))))

    try:
        graph.toposort()
    except CycleException as exc:
        violations.append(ForestViolation(None, "forest", "child links form the cycle %s"
                                          % " -> ".join(str(node) for node in exc.path)))
        return violations

    incoming = {}
    for side, source, destination in spec.pointers():
        incoming.setdefault(destination, []).append((side, source))
    for destination, sources in sorted(incoming.items()):
        if len(sources) > 1:
            violations.append(ForestViolation(destination, "pointer",
                                              "destination of %i pointers" % len(sources)))

    for root in graph.sources():
        if not spec.label(root).z.is_empty():
            violations.append(ForestViolation(root, "root", "root label %s has a condition" % spec.label(root)))

    if not spec.node_ids:
        violations.append(ForestViolation(None, "forest", "no nodes"))
    return violations


def _pointer_violation(spec, node, side, pointer, value):
    if pointer == node:
        return ForestViolation(node, _clause(side, "c"), "%s pointer points to its own node" % side)
    if spec.label(pointer).variables() != value:
        return ForestViolation(node, _clause(side, "c"),
                               "%s pointer destination %s does not have the variables %s"
                               % (side, spec.label(pointer), value))
    return None


def _side_violation(spec, node, side, allow_pointers):
    """
    None when one of the clauses holds for the side, otherwise the
    violation of the clause the side attempts, a pointer before a child
    """
    value = _side_set(spec.label(node), side)
    child = spec.child(side, node)
    pointer = spec.pointer(side, node)

    if pointer is not None and not allow_pointers:
        return ForestViolation(node, _clause(side, "c"), "pointers are not allowed in a tree")

    if child is None and value in (spec.special_a, spec.special_b):
        return None

    violation = None
    if child is not None:
        if spec.label(child).z == value:
            return None
        violation = ForestViolation(node, _clause(side, "b"),
                                    "%s child %s is not conditioned on %s" % (side, spec.label(child), value))

    if pointer is not None:
        violation = _pointer_violation(spec, node, side, pointer, value)
        if violation is None:
            return None

    if violation is None:
        violation = ForestViolation(node, _clause(side, "a"),
                                    "%s is not %s or %s and there is no %s child"
                                    % (value, spec.special_a, spec.special_b, side))
    return violation


def _node_violations(spec, allow_pointers):
    violations = []
    for node in spec.node_ids:
        for side in SIDES:
            violation = _side_violation(spec, node, side, allow_pointers)
            if violation is not None:
                violations.append(violation)
    return violations


def validate_forest(spec):
    """
    All violations of the forest clauses, empty when the forest is valid
    """
    violations = structure_violations(spec)
    if any(violation.clause == "forest" for violation in violations):
        return violations
    return violations + _node_violations(spec, allow_pointers=True)


def validate_tree(spec):
    """
    All violations of the tree clauses, a tree has one root and no pointers
    """
    violations = [violation for violation in structure_violations(spec) if violation.clause != "pointer"]
    if any(violation.clause == "forest" for violation in violations):
        return violations

    roots = spec.roots()
    if len(roots) != 1:
        violations.append(ForestViolation(None, "tree", "a tree has one root, found %i" % len(roots)))
    return violations + _node_violations(spec, allow_pointers=False)


def _special_term(spec):
    return InfoTerm.mutual(spec.special_a, spec.special_b)


def _raise_on(violations, what):
    if violations:
        raise ValidationError("Invalid %s: %s" % (what, "; ".join(str(violation) for violation in violations)),
                              violations)


def tree_inequality(spec):
    """
    I(A;B) <= sum of the node labels
    """
    _raise_on(validate_tree(spec), "tree")
    return LinearInequality.from_sides(expand_info_term(_special_term(spec)), spec.label_sum())


def forest_inequality(spec):
    """
    m I(A;B) <= sum of the node labels where m is the number of roots
    """
    _raise_on(validate_forest(spec), "forest")
    lesser = expand_info_term(_special_term(spec)).scale(len(spec.roots()))
    return LinearInequality.from_sides(lesser, spec.label_sum())


class TermList(object):
    """
    Terms I(x_i;y_i|w_i) over single variables where w_1 is empty
    """

    def __init__(self, terms, special_a, special_b):
        self.terms = list(terms)
        self.special_a = special_a
        self.special_b = special_b

    @property
    def universe(self):
        return self.terms[0].universe

    def violations(self):
        """
        Violations of the list conditions as (term index, message) pairs
        """
        result = []
        if not self.terms:
            return [(None, "empty term list")]

        specials = (self.special_a, self.special_b)
        as_condition = {}
        as_side = {}
        for index, term in enumerate(self.terms):
            condition = term.z
            for value in (term.x, term.y) + ((condition,) if index > 0 else ()):
                if len(value) != 1:
                    result.append((index, "%s is not a single variable" % value))
            if index == 0 and not condition.is_empty():
                result.append((index, "the first term has a condition"))
            if index > 0:
                if condition in specials:
                    result.append((index, "%s is used as a condition" % condition))
                as_condition.setdefault(condition, []).append(index)
            for value in (term.x, term.y):
                if value not in specials:
                    as_side.setdefault(value, []).append(index)

        for variable in sorted(set(as_condition) | set(as_side), key=lambda value: value.mask):
            if variable in specials or len(variable) != 1:
                continue
            conditions = len(as_condition.get(variable, []))
            sides = len(as_side.get(variable, []))
            if conditions != 1 or sides != 1:
                result.append((None, "%s is used %i time(s) as a condition and %i time(s) as x or y"
                               % (variable, conditions, sides)))
        return result


def list_to_tree(term_list):
    """
    The tree of a term list: the first term is the root and a non special
    side x of a node gets the term conditioned on x as its child
    """
    violations = term_list.violations()
    if violations:
        raise ValidationError("Invalid term list: %s"
                              % "; ".join("term %s: %s" % (index, message) if index is not None else message
                                          for index, message in violations))

    specials = (term_list.special_a, term_list.special_b)
    by_condition = {}
    for index, term in enumerate(term_list.terms[1:], 1):
        by_condition[term.z] = index

    spec = ForestSpec(term_list.universe, term_list.special_a, term_list.special_b)
    used = set()

    def build(index):
        if index in used:
            raise ValidationError("Term %i is used twice" % index)
        used.add(index)
        term = term_list.terms[index]
        node = spec.add_node(term)
        for side in SIDES:
            value = _side_set(term, side)
            if value not in specials:
                spec.set_child(side, node, build(by_condition[value]))
        return node

    build(0)
    LOGGER.debug("Term list of %i terms gave a tree of %i nodes", len(term_list.terms), len(spec))
    return spec


def random_forest(seed, max_nodes=8, max_variables=6):
    """
    A random valid forest over A, B, C, ... with A and B special
    """
    if max_nodes < 1 or max_variables < 3:
        raise ValidationError("Random forests need at least one node and three variables")

    rng = np.random.default_rng(seed)
    universe = VarUniverse.letters(int(rng.integers(3, max_variables + 1)))
    special_a = universe.varset("A")
    special_b = universe.varset("B")
    spec = ForestSpec(universe, special_a, special_b)
    budget = [max_nodes]
    incoming = set()

    def random_set():
        return VarSet(universe, int(rng.integers(1, universe.full_mask + 1)))

    def resolve(node, side):
        """
        Pick a value for a side together with how it is resolved
        """
        choice = int(rng.integers(0, 3))
        if choice == 1 and budget[0] > 0:
            budget[0] -= 1
            return random_set(), "child"
        if choice == 2:
            targets = [other for other in spec.node_ids if other != node and other not in incoming]
            if targets:
                destination = targets[int(rng.integers(0, len(targets)))]
                return destination, "pointer"
        return (special_a, special_b)[int(rng.integers(0, 2))], "special"

    def grow(condition):
        node = spec.add_node(InfoTerm.mutual(special_a, special_b, condition))
        sides = []
        for side in SIDES:
            value, kind = resolve(node, side)
            if kind == "pointer":
                incoming.add(value)
                spec.set_pointer(side, node, value)
                value = spec.label(value).variables()
            sides.append((side, value, kind))

        spec.relabel(node, InfoTerm.mutual(sides[0][1], sides[1][1], condition))
        for side, value, kind in sides:
            if kind == "child":
                spec.set_child(side, node, grow(value))
        return node

    num_roots = int(rng.integers(1, 3))
    for _ in range(num_roots):
        if budget[0] <= 0:
            break
        budget[0] -= 1
        grow(VarSet(universe, 0))

    LOGGER.debug("Random forest for seed %s has %i nodes and %i roots", seed, len(spec), len(spec.roots()))
    return spec
