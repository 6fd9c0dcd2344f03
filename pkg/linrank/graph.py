# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Directed graphs of forest links with cycle detection
"""

from collections import OrderedDict


class LinkGraph(object):
    """
    Directed graph where an edge goes from a parent to a child
    """

    def __init__(self):
        self._children = OrderedDict()
        self._parents = {}

    def add_node(self, node):
        self._children.setdefault(node, set())
        self._parents.setdefault(node, set())

    def add_edge(self, parent, child):
        """
        Add an edge, returns False when it was already present
        """
        self.add_node(parent)
        self.add_node(child)
        if child in self._children[parent]:
            return False
        self._children[parent].add(child)
        self._parents[child].add(parent)
        return True

    @property
    def nodes(self):
        return list(self._children)

    def parents(self, node):
        return sorted(self._parents.get(node, ()))

    def children(self, node):
        return sorted(self._children.get(node, ()))

    def sources(self):
        """
        Nodes without parents in insertion order
        """
        return [node for node in self._children if not self._parents[node]]

    def toposort(self):
        """
        Every node comes before its children, a cycle raises CycleException
        """
        finished = []
        done = set()
        for start in sorted(self._children):
            if start in done:
                continue

            path = [start]
            pending = [iter(self.children(start))]
            while pending:
                child = next(pending[-1], None)
                if child is None:
                    pending.pop()
                    node = path.pop()
                    done.add(node)
                    finished.append(node)
                elif child in path:
                    raise CycleException(path[path.index(child):] + [child])
                elif child not in done:
                    path.append(child)
                    pending.append(iter(self.children(child)))

        finished.reverse()
        return finished


class CycleException(Exception):
    """
    Raised when the links form a cycle
    """

    def __init__(self, path):
        Exception.__init__(self, "Cycle %s" % " -> ".join(str(node) for node in path))
        self.path = path
