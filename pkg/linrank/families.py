# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Infinite families of linear rank inequalities
"""

from linrank.universe import VarUniverse
from linrank.expression import EntropyExpr, InfoTerm, LinearInequality, expand_info_term
from linrank.forest import ForestSpec, LEFT, RIGHT, tree_inequality
from linrank.exceptions import FamilyRangeError

MAX_STARTWO = 12


def _mutual(universe, x, y, z=()):
    return expand_info_term(InfoTerm.mutual(universe.varset(x), universe.varset(y), universe.varset(z)))


def _check_range(kind, num, minimum, maximum=None):
    if num < minimum or (maximum is not None and num > maximum):
        if maximum is None:
            expected = "n >= %i" % minimum
        else:
            expected = "%i <= n <= %i" % (minimum, maximum)
        raise FamilyRangeError("Family %s needs %s, got n=%i" % (kind, expected, num))


def starone_universe(num):
    return VarUniverse(["A0", "B0"] + ["B%i" % idx for idx in range(1, num + 1)])


def starone(num):
    """
    I(A0;B0) <= I(A0;B0|B1) + I(A0;B1|B2) + ... + I(A0;B(n-1)|Bn) + I(B0;Bn)
    """
    _check_range("starone", num, 1)
    universe = starone_universe(num)
    greater = _mutual(universe, "B0", "B%i" % num)
    for idx in range(1, num + 1):
        greater = greater + _mutual(universe, "A0", "B%i" % (idx - 1), "B%i" % idx)
    return LinearInequality.from_sides(_mutual(universe, "A0", "B0"), greater, "starone(%i)" % num)


def startwo_universe(num):
    names = []
    for idx in range(num + 1):
        names.extend(["A%i" % idx, "B%i" % idx])
    return VarUniverse(names)


def startwo(num):
    """
    I(A0;B0) <= sum over k < n of 2^(n-1-k) (I(Ak;Bk|A(k+1)) + I(Ak;Bk|B(k+1))) + I(An;Bn)
    """
    _check_range("startwo", num, 1, MAX_STARTWO)
    universe = startwo_universe(num)
    greater = _mutual(universe, "A%i" % num, "B%i" % num)
    for idx in range(num):
        weight = 2 ** (num - 1 - idx)
        pair = ("A%i" % idx, "B%i" % idx)
        greater = greater + (_mutual(universe, pair[0], pair[1], "A%i" % (idx + 1)) +
                             _mutual(universe, pair[0], pair[1], "B%i" % (idx + 1))).scale(weight)
    return LinearInequality.from_sides(_mutual(universe, "A0", "B0"), greater, "startwo(%i)" % num)


def npvar_universe(num):
    return VarUniverse(["A", "B"] + ["C%i" % idx for idx in range(1, num + 1)])


def npvar(num):
    """
    (n-1)I(A;B) <= sum of I(A;B|Ci) + I(C1;C2) + I(C1,C2;C3) + ... + I(C1..C(n-1);Cn)
    """
    _check_range("npvar", num, 2)
    universe = npvar_universe(num)
    names = ["C%i" % idx for idx in range(1, num + 1)]
    greater = EntropyExpr.zero(universe)
    for name in names:
        greater = greater + _mutual(universe, "A", "B", name)
    for idx in range(1, num):
        greater = greater + _mutual(universe, names[:idx], names[idx])
    return LinearInequality.from_sides(_mutual(universe, "A", "B").scale(num - 1), greater, "npvar(%i)" % num)


def indep(num):
    """
    (n-1)I(A;B) + H(C1..Cn) <= sum of I(A,Ci;B,Ci)
    """
    _check_range("indep", num, 2)
    universe = npvar_universe(num)
    names = ["C%i" % idx for idx in range(1, num + 1)]
    lesser = _mutual(universe, "A", "B").scale(num - 1) + EntropyExpr.entropy(universe.varset(names))
    greater = EntropyExpr.zero(universe)
    for name in names:
        greater = greater + _mutual(universe, ["A", name], ["B", name])
    return LinearInequality.from_sides(lesser, greater, "indep(%i)" % num)


def kinser_universe(num):
    return VarUniverse(["A%i" % idx for idx in range(1, num + 1)])


def kinser(num):
    """
    I(A2;A3) <= I(A1;A2) + I(A3;An|A1) + sum for 4 <= i <= n of I(A2;A(i-1)|Ai)
    """
    _check_range("kinser", num, 4)
    universe = kinser_universe(num)
    greater = _mutual(universe, "A1", "A2") + _mutual(universe, "A3", "A%i" % num, "A1")
    for idx in range(4, num + 1):
        greater = greater + _mutual(universe, "A2", "A%i" % (idx - 1), "A%i" % idx)
    return LinearInequality.from_sides(_mutual(universe, "A2", "A3"), greater, "kinser(%i)" % num)


FAMILIES = {
    "starone": starone,
    "startwo": startwo,
    "npvar": npvar,
    "indep": indep,
    "kinser": kinser,
}


def family(kind, num):
    """
    The member n of the named family
    """
    if kind not in FAMILIES:
        raise FamilyRangeError("Unknown family %s, expected one of %s" % (kind, ", ".join(sorted(FAMILIES))))
    return FAMILIES[kind](num)


def chain_tree(num):
    """
    The single chain tree I(B0;Bn) -> I(A0;B(n-1)|Bn) -> ... -> I(A0;B0|B1)
    whose inequality is starone(n)
    """
    _check_range("starone", num, 1)
    universe = starone_universe(num)
    spec = ForestSpec(universe, universe.varset("A0"), universe.varset("B0"))
    node = spec.add_node(InfoTerm.mutual(universe.varset("B0"), universe.varset("B%i" % num)))
    for idx in range(num, 0, -1):
        child = spec.add_node(InfoTerm.mutual(universe.varset("A0"), universe.varset("B%i" % (idx - 1)),
                                              universe.varset("B%i" % idx)))
        spec.set_child(RIGHT, node, child)
        node = child
    return spec


def complete_tree(num):
    """
    The complete binary tree of height n whose inequality is startwo(n)
    """
    _check_range("startwo", num, 1, MAX_STARTWO)
    universe = startwo_universe(num)
    spec = ForestSpec(universe, universe.varset("A0"), universe.varset("B0"))

    def grow(level, condition):
        term = InfoTerm.mutual(universe.varset("A%i" % level), universe.varset("B%i" % level),
                               universe.varset(condition))
        node = spec.add_node(term)
        if level > 0:
            spec.set_child(LEFT, node, grow(level - 1, ["A%i" % level]))
            spec.set_child(RIGHT, node, grow(level - 1, ["B%i" % level]))
        return node

    grow(num, [])
    return spec


def family_tree_inequality(kind, num):
    """
    The family member generated from its tree, starone and startwo only
    """
    if kind == "starone":
        return tree_inequality(chain_tree(num))
    if kind == "startwo":
        return tree_inequality(complete_tree(num))
    raise FamilyRangeError("Family %s has no tree" % kind)
