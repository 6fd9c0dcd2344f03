# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Exact Shannon prover with equality hypotheses

A target is proved by writing its expression as a nonnegative combination
of elemental inequalities plus an arbitrary combination of the hypothesis
equalities.  When no such combination exists the dual solution is a rank
vector in the Shannon cone that satisfies the hypotheses and violates the
target.
"""

import logging
from fractions import Fraction
from linrank.elementals import elemental_inequalities
from linrank.expression import EntropyExpr, evaluate
from linrank.rank_vector import RankVector
from linrank.simplex import FarkasSystem, integer_direction
from linrank.warm_start import warm_solve
from linrank.exceptions import UniverseError, ValidationError, LinRankError

LOGGER = logging.getLogger(__name__)


class ProverSettings(object):
    """
    Resource and strategy settings of the prover
    """

    def __init__(self, pivot_limit=10 ** 7, warm_start=True):
        self.pivot_limit = pivot_limit
        self.warm_start = warm_start


class ProofCertificate(object):
    """
    lambdas maps elemental index to a nonnegative multiplier, mus maps
    hypothesis index to a multiplier of any sign
    """

    def __init__(self, universe, target, hypotheses, lambdas, mus):
        self.universe = universe
        self.target = target
        self.hypotheses = list(hypotheses)
        self.lambdas = dict((index, Fraction(value)) for index, value in lambdas.items())
        self.mus = dict((index, Fraction(value)) for index, value in mus.items())

    def combination(self):
        """
        The expression the multipliers add up to
        """
        elementals = elemental_inequalities(self.universe)
        result = EntropyExpr.zero(self.universe)
        for index, value in sorted(self.lambdas.items()):
            result = result + elementals[index].expr.scale(value)
        for index, value in sorted(self.mus.items()):
            result = result + self.hypotheses[index].expr.scale(value)
        return result

    def __eq__(self, other):
        return (isinstance(other, ProofCertificate) and
                self.universe == other.universe and
                self.target == other.target and
                self.hypotheses == other.hypotheses and
                self.lambdas == other.lambdas and
                self.mus == other.mus)

    def __ne__(self, other):
        return not self == other


def verify_certificate(certificate):
    """
    Re-check a certificate with plain rational arithmetic
    """
    universe = certificate.universe
    num = len(elemental_inequalities(universe))

    for index, value in certificate.lambdas.items():
        if not 0 <= index < num or value < 0:
            return False

    for index in certificate.mus:
        if not 0 <= index < len(certificate.hypotheses):
            return False

    if certificate.target.universe != universe:
        return False

    for hypothesis in certificate.hypotheses:
        if hypothesis.universe != universe or not hypothesis.equality:
            return False

    return certificate.combination() == certificate.target.expr


class CounterexampleWitness(object):
    """
    A Shannon cone vector satisfying the hypotheses and violating the target
    """

    def __init__(self, universe, vector, target, hypotheses):
        self.universe = universe
        self.vector = vector
        self.target = target
        self.hypotheses = list(hypotheses)


def check_witness(witness):
    """
    True when the witness satisfies every elemental and every hypothesis and violates the target
    """
    vector = witness.vector
    if vector.universe != witness.universe:
        return False
    if any(evaluate(elemental, vector) < 0 for elemental in elemental_inequalities(witness.universe)):
        return False
    if any(evaluate(hypothesis, vector) != 0 for hypothesis in witness.hypotheses):
        return False
    return evaluate(witness.target, vector) < 0


class Proved(object):
    exit_code = 0
    status = "proved"

    def __init__(self, certificate):
        self.certificate = certificate

    def __repr__(self):
        return "Proved(%s)" % self.certificate.target


class NotProvable(object):
    exit_code = 1
    status = "not provable"

    def __init__(self, witness):
        self.witness = witness

    def __repr__(self):
        return "NotProvable(%s)" % self.witness.vector


class Undecided(object):
    exit_code = 2
    status = "undecided"

    def __init__(self, pivots):
        self.pivots = pivots

    def __repr__(self):
        return "Undecided(pivots=%i)" % self.pivots


def _column(expr):
    return dict((mask - 1, value) for mask, value in expr.items())


def farkas_system(target, hypotheses):
    """
    The Farkas system of a target over the elementals and hypotheses of its universe
    """
    universe = target.universe
    return FarkasSystem(universe.num_coords,
                        [_column(elemental.expr) for elemental in elemental_inequalities(universe)],
                        [_column(hypothesis.expr) for hypothesis in hypotheses],
                        _column(target.expr))


def prove(target, hypotheses=(), settings=None):
    """
    Prove target >= 0 from the elementals and the hypothesis equalities

    Returns Proved, NotProvable or Undecided, never a wrong answer.
    """
    if settings is None:
        settings = ProverSettings()

    if target.equality:
        raise ValidationError("Cannot prove the equality %s, state it as two inequalities" % target)

    universe = target.universe
    hypotheses = list(hypotheses)
    for hypothesis in hypotheses:
        if hypothesis.universe != universe:
            raise UniverseError("Hypothesis %s is not over the universe %s" % (hypothesis, universe))
        if not hypothesis.equality:
            raise ValidationError("Hypothesis %s is not an equality" % hypothesis)

    system = farkas_system(target, hypotheses)
    result = None
    if settings.warm_start:
        result = warm_solve(system, settings.pivot_limit)
    if result is None:
        result = system.solve(settings.pivot_limit)
    LOGGER.debug("Solved %s with %i pivots: %s", target, result.pivots, result.status)

    if result.feasible:
        certificate = ProofCertificate(universe, target, hypotheses, result.lambdas, result.mus)
        if not verify_certificate(certificate):
            raise LinRankError("Internal error: certificate for %s does not verify" % target)
        return Proved(certificate)

    if result.infeasible:
        vector = RankVector(universe, integer_direction(result.witness))
        witness = CounterexampleWitness(universe, vector, target, hypotheses)
        if not check_witness(witness):
            raise LinRankError("Internal error: witness for %s does not check" % target)
        return NotProvable(witness)

    return Undecided(result.pivots)
