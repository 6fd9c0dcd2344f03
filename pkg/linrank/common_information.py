# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Proofs that assume common informations exist
"""

from linrank.expression import EntropyExpr, InfoTerm, LinearInequality, expand_info_term
from linrank.parsing.hypothesis_parser import hypothesis_equalities, hypothesis_universe
from linrank.prover import prove


def prove_with_common_informations(target, decls, settings=None):
    """
    Prove a ground inequality from the Shannon inequalities of the ground
    variables and the auxiliaries plus the equalities of every declaration
    """
    universe, equalities = hypothesis_equalities(target.universe, decls)
    return prove(target.lift(universe), equalities, settings)


def k_slack_form(target, decls, k, multiplicities=None):
    """
    The hypothesis free form of a target where, for each declaration
    Z = CI(X;Y), multiplicity copies of I(X;Y) are traded for H(Z) and the
    slack k*H(Z|X) + k*H(Z|Y) is added to the greater side
    """
    decls = list(decls)
    if multiplicities is None:
        multiplicities = [1] * len(decls)
    if len(multiplicities) != len(decls):
        raise ValueError("Expected %i multiplicities, got %i" % (len(decls), len(multiplicities)))

    universe = hypothesis_universe(target.universe, decls)
    expr = target.expr.lift(universe)
    for decl, multiplicity in zip(decls, multiplicities):
        new = universe.varset(decl.new_var)
        left = universe.varset(decl.left)
        right = universe.varset(decl.right)
        traded = expand_info_term(InfoTerm.mutual(left, right)) - EntropyExpr.entropy(new)
        slack = (expand_info_term(InfoTerm.conditional(new, left)) +
                 expand_info_term(InfoTerm.conditional(new, right)))
        expr = expr + traded.scale(multiplicity) + slack.scale(k)
    return LinearInequality(expr, target.label)


def prove_k_slack(target, decls, k, multiplicities=None, settings=None):
    """
    Pure Shannon proof of the slack form of a target, see k_slack_form
    """
    return prove(k_slack_form(target, decls, k, multiplicities), (), settings)
