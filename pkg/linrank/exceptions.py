# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Contains exceptions which are globally known
"""


class LinRankError(Exception):
    """
    Base class of all linrank errors
    """


class UniverseError(LinRankError):
    """
    Unknown variable, mismatching universe or too many variables
    """


class RankVectorError(LinRankError):
    """
    Malformed rank vector
    """


class ValidationError(LinRankError):
    """
    An object failed validation, the violations are kept for reporting
    """

    def __init__(self, message, violations=None):
        LinRankError.__init__(self, message)
        self.violations = [] if violations is None else list(violations)


class InequalityViolated(LinRankError):
    """
    A rank vector violates an inequality it was required to satisfy
    """

    def __init__(self, label, index, value):
        LinRankError.__init__(self, "Inequality %s (index %i) is violated, slack is %s" % (label, index, value))
        self.label = label
        self.index = index
        self.value = value


class RetryBudgetExhausted(LinRankError):
    """
    Random general position choices kept failing
    """


class CertificateFormatError(LinRankError):
    """
    Malformed certificate or witness text
    """


class FamilyRangeError(LinRankError):
    """
    Family parameter outside its range
    """
