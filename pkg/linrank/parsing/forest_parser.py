# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Forest specification files

  universe A B C D E
  special A B
  node 1 I(C,D;E)
  node 2 I(A;B|E)
  node 3 I(C;D)
  right 2 of 1
  lptr 1 -> 3

The universe line is optional, without it the universe is every variable
mentioned.  Node ids are 1, 2, ... in order.  A collection of forests
separates the specifications with 'forest <tag>' lines.
"""

import re
from collections import OrderedDict
from linrank.parsing.tokenizer import LocationException
from linrank.parsing.data_formats import content_lines
from linrank.parsing.expression_parser import parse_info_term, parse_vlist
from linrank.forest import ForestSpec, LEFT, RIGHT, SIDES, structure_violations
from linrank.universe import VarUniverse
from linrank.exceptions import ValidationError, UniverseError

VARIABLE_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*(?![a-zA-Z0-9_]|\s*\()")
INTEGER_RE = re.compile(r"^\d+$")
POINTER_KEYWORDS = {"lptr": LEFT, "rptr": RIGHT}


def _infer_universe(lines):
    names = []
    for line in lines:
        keyword = line.words()[0]
        if keyword == "node":
            names.extend(VARIABLE_RE.findall(line.rest(2)))
        elif keyword == "special":
            names.extend(VARIABLE_RE.findall(line.rest(1)))
    if not names:
        raise UniverseError("No variables found in the forest specification")
    return VarUniverse.from_names(names)


def _node_id(line, word_index, nodes):
    word = line.words()[word_index]
    if not INTEGER_RE.match(word) or int(word) not in nodes:
        raise line.error("Unknown node %s" % word, word_index)
    return int(word)


def _parse_lines(lines, file_name):
    universe = None
    special = None
    for line in lines:
        keyword = line.words()[0]
        if keyword == "universe":
            if universe is not None:
                raise line.error("Duplicate universe line")
            try:
                universe = VarUniverse(line.words()[1:])
            except UniverseError as exc:
                raise line.error(str(exc))
        elif keyword == "special":
            if special is not None:
                raise line.error("Duplicate special line")
            special = line
    if special is None:
        raise LocationException.error("Missing 'special <A> <B>' line",
                                      lines[0].location() if lines else None)
    if universe is None:
        universe = _infer_universe(lines)

    words = special.words()
    if len(words) != 3:
        raise special.error("Expected 'special <variables> <variables>'")
    columns = [special.location(index).column for index in (1, 2)]
    special_a = parse_vlist(" " * (columns[0] - 1) + words[1], universe, file_name, special.line)
    special_b = parse_vlist(" " * (columns[1] - 1) + words[2], universe, file_name, special.line)
    spec = ForestSpec(universe, special_a, special_b)

    node_lines = {}
    for line in lines:
        words = line.words()
        keyword = words[0]
        if keyword in ("universe", "special"):
            continue
        if keyword == "node":
            expected = len(spec) + 1
            if len(words) < 3 or words[1] != str(expected):
                raise line.error("Expected 'node %i <information term>'" % expected)
            term = parse_info_term(line.rest(2), universe, file_name, line.line)
            if not term.is_mutual():
                raise line.error("Node label must be a mutual information term", 2)
            node_lines[spec.add_node(term)] = line
        elif keyword in SIDES:
            if len(words) != 4 or words[2] != "of":
                raise line.error("Expected '%s <child> of <parent>'" % keyword)
            child = _node_id(line, 1, node_lines)
            parent = _node_id(line, 3, node_lines)
            _link(line, spec.set_child, keyword, parent, child)
        elif keyword in POINTER_KEYWORDS:
            if len(words) != 4 or words[2] != "->":
                raise line.error("Expected '%s <source> -> <destination>'" % keyword)
            source = _node_id(line, 1, node_lines)
            destination = _node_id(line, 3, node_lines)
            _link(line, spec.set_pointer, POINTER_KEYWORDS[keyword], source, destination)
        else:
            raise line.error("Unknown keyword %s" % keyword, 0)

    if len(spec) == 0:
        raise special.error("The forest has no nodes")

    for violation in structure_violations(spec):
        if violation.clause in ("forest", "pointer"):
            location = special.location() if violation.node is None else node_lines[violation.node].location()
            raise LocationException.error(str(violation), location)
    return spec


def _link(line, method, side, first, second):
    try:
        method(side, first, second)
    except ValidationError as exc:
        raise line.error(str(exc))


def parse_forest_spec(code, file_name=None, first_line=1):
    """
    Parse one forest, the shape is checked but not the forest clauses
    """
    return _parse_lines(content_lines(code, file_name, first_line), file_name)


def parse_forest_collection(code, file_name=None):
    """
    Parse 'forest <tag>' sections into an ordered mapping from tag to ForestSpec
    """
    sections = OrderedDict()
    current = None
    for line in content_lines(code, file_name):
        words = line.words()
        if words[0] == "forest":
            if len(words) != 2:
                raise line.error("Expected 'forest <tag>'")
            if words[1] in sections:
                raise line.error("Duplicate forest %s" % words[1], 1)
            current = sections[words[1]] = []
        elif current is None:
            raise line.error("Expected 'forest <tag>' before %s" % words[0], 0)
        else:
            current.append(line)
    return OrderedDict((tag, _parse_lines(lines, file_name)) for tag, lines in sections.items())


def format_forest_spec(spec):
    result = ["universe %s\n" % spec.universe,
              "special %s %s\n" % (spec.special_a, spec.special_b)]
    for node in spec.node_ids:
        result.append("node %i %s\n" % (node, spec.label(node)))
    for side in SIDES:
        for node in spec.node_ids:
            child = spec.child(side, node)
            if child is not None:
                result.append("%s %i of %i\n" % (side, child, node))
    for side, source, destination in spec.pointers():
        result.append("%s %i -> %i\n" % ("lptr" if side == LEFT else "rptr", source, destination))
    return "".join(result)
