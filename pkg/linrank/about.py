# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Provides documentation and version information
"""


def license_text():
    """
    Returns licence text
    """
    return """linrank is released under the terms of Mozilla Public License, v. 2.0.

Copyright (c) 2016-2017, linrank contributors
"""


def doc():
    """
    Returns short introduction to linrank
    """
    return r"""What is linrank?
================

linrank is a toolkit for linear rank inequalities, the linear
inequalities satisfied by the dimensions of sums of subspaces of a
vector space. It proves inequalities over the Shannon cone with an
exact rational simplex, optionally assuming common informations, and
every answer comes with a certificate that can be re-checked by pure
arithmetic. It also generates inequalities from binary tree and forest
specifications, ships a catalog of known five and six variable
inequalities with their proof recipes, checks rank vectors against
polymatroid axioms, computes ranks of subspace arrangements over the
rationals and over prime fields, and searches for linear
representations of rank vectors by dimension counting.

Run ``linrank --help`` for the command line interface.

License
=======
""" + license_text()


def version():
    """
    Returns linrank version
    """
    return '1.0.0'
