# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Test the Shannon prover
"""

from unittest import TestCase
from linrank.prover import (ProverSettings, ProofCertificate, CounterexampleWitness, Proved, NotProvable,
                            Undecided, prove, verify_certificate, check_witness)
from linrank.expression import evaluate
from linrank.rank_vector import RankVector
from linrank.exceptions import ValidationError, UniverseError
from linrank.test.common import INGLETON, inequality, letters

EXACT = ProverSettings(warm_start=False)


class TestProve(TestCase):
    """
    Test proofs and counterexamples
    """

    def test_elemental_is_proved_by_itself(self):
        for settings in [EXACT, ProverSettings()]:
            outcome = prove(inequality("I(A;B) >= 0", 2), (), settings)
            self.assertIsInstance(outcome, Proved)
            self.assertEqual(outcome.certificate.lambdas, {2: 1})
            self.assertEqual(outcome.certificate.mus, {})
            self.assertEqual(outcome.exit_code, 0)

    def test_submodularity_is_proved(self):
        outcome = prove(inequality("H(A,C) + H(B,C) >= H(A,B,C) + H(C)", 3), (), EXACT)
        self.assertIsInstance(outcome, Proved)
        self.assertTrue(verify_certificate(outcome.certificate))

    def test_negated_elemental_is_not_provable(self):
        outcome = prove(inequality("I(A;B) <= 0", 2), (), EXACT)
        self.assertIsInstance(outcome, NotProvable)
        self.assertEqual(outcome.exit_code, 1)
        self.assertTrue(check_witness(outcome.witness))
        self.assertLess(evaluate(outcome.witness.target, outcome.witness.vector), 0)

    def test_ingleton_is_not_shannon(self):
        for settings in [EXACT, ProverSettings()]:
            outcome = prove(inequality(INGLETON), (), settings)
            self.assertIsInstance(outcome, NotProvable)
            self.assertTrue(check_witness(outcome.witness))
            self.assertTrue(all(float(value).is_integer() for value in outcome.witness.vector.coords))

    def test_hypothesis_is_used(self):
        universe = letters(2)
        target = inequality("H(A) <= H(B)", 2)
        hypothesis = inequality("H(A|B) = 0", 2)
        self.assertIsInstance(prove(target, (), EXACT), NotProvable)

        outcome = prove(target, [hypothesis], EXACT)
        self.assertIsInstance(outcome, Proved)
        self.assertEqual(outcome.certificate.lambdas, {1: 1})
        self.assertEqual(outcome.certificate.mus, {0: -1})
        self.assertEqual(outcome.certificate.universe, universe)

    def test_pivot_limit_gives_undecided(self):
        outcome = prove(inequality("I(A;B) >= 0", 2), (), ProverSettings(pivot_limit=0, warm_start=False))
        self.assertIsInstance(outcome, Undecided)
        self.assertEqual(outcome.exit_code, 2)
        self.assertEqual(outcome.status, "undecided")

    def test_should_raise_on_equality_target(self):
        self.assertRaises(ValidationError, prove, inequality("H(A) = H(B)", 2))

    def test_should_raise_on_inequality_hypothesis(self):
        self.assertRaises(ValidationError, prove, inequality("H(A) <= H(B)", 2), [inequality("H(A) >= 0", 2)])

    def test_should_raise_on_hypothesis_universe(self):
        self.assertRaises(UniverseError, prove, inequality("H(A) <= H(B)", 2), [inequality("H(A|B) = 0", 3)])


class TestVerify(TestCase):
    """
    Test the independent checks of certificates and witnesses
    """

    def setUp(self):
        self.target = inequality("I(A;B) >= 0", 2)

    def test_valid_certificate(self):
        certificate = ProofCertificate(letters(2), self.target, [], {2: 1}, {})
        self.assertTrue(verify_certificate(certificate))

    def test_wrong_combination(self):
        certificate = ProofCertificate(letters(2), self.target, [], {2: 2}, {})
        self.assertFalse(verify_certificate(certificate))

    def test_negative_multiplier(self):
        target = inequality("-I(A;B) >= 0", 2)
        certificate = ProofCertificate(letters(2), target, [], {2: -1}, {})
        self.assertEqual(certificate.combination(), target.expr)
        self.assertFalse(verify_certificate(certificate))

    def test_index_out_of_range(self):
        certificate = ProofCertificate(letters(2), self.target, [], {3: 1}, {})
        self.assertFalse(verify_certificate(certificate))
        certificate = ProofCertificate(letters(2), self.target, [], {2: 1}, {0: 1})
        self.assertFalse(verify_certificate(certificate))

    def test_witness(self):
        target = inequality("I(A;B) <= 0", 2)
        good = CounterexampleWitness(letters(2), RankVector(letters(2), [1, 1, 1]), target, [])
        self.assertTrue(check_witness(good))
        satisfying = CounterexampleWitness(letters(2), RankVector(letters(2), [1, 1, 2]), target, [])
        self.assertFalse(check_witness(satisfying))
        not_shannon = CounterexampleWitness(letters(2), RankVector(letters(2), [1, 1, 3]), target, [])
        self.assertFalse(check_witness(not_shannon))

    def test_witness_must_satisfy_hypotheses(self):
        target = inequality("I(A;B) <= 0", 2)
        hypothesis = inequality("H(A|B) = 0", 2)
        witness = CounterexampleWitness(letters(2), RankVector(letters(2), [1, 1, 1]), target, [hypothesis])
        self.assertTrue(check_witness(witness))
        witness = CounterexampleWitness(letters(2), RankVector(letters(2), [2, 1, 2]), target, [hypothesis])
        self.assertFalse(check_witness(witness))
