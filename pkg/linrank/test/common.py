# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Common functions and fixtures re-used between test cases
"""

import contextlib
import shutil
import tempfile
from linrank.parsing.data_formats import parse_rank_vector, parse_matrices
from linrank.parsing.expression_parser import parse_inequality
from linrank.universe import VarUniverse

# Ranks of five subspaces A..E of a three dimensional space
POLYMAT_EXAMPLE = "1 1 2 1 2 2 3 1 2 2 3 2 3 3 3 2 3 3 3 2 3 3 3 2 3 3 3 2 3 3 3"

EXAMPLE_MATRICES = """\
matrix A 1 3
1 0 0
matrix B 1 3
0 1 0
matrix C 1 3
0 0 1
matrix D 1 3
1 1 1
matrix E 2 3
1 1 0
0 0 1
"""

# Four points of a line, the last one needs a field with more than two elements
U24_MATRICES = """\
matrix B 1 2
1 0
matrix C 1 2
0 1
matrix D 1 2
1 1
matrix E 1 2
1 2
"""

DOUBLED_U24_MATRICES = """\
matrix B 2 4
1 0 0 0
0 1 0 0
matrix C 2 4
0 0 1 0
0 0 0 1
matrix D 2 4
1 0 1 0
0 1 0 1
matrix E 2 4
1 1 0 1
0 1 1 0
"""

INGLETON = "I(A;B) <= I(A;B|C) + I(A;B|D) + I(C;D)"


def letters(num):
    return VarUniverse.letters(num)


def rank_vector(text, universe=None):
    return parse_rank_vector(text, universe)


def matrices(text):
    return parse_matrices(text)


def inequality(text, num=None):
    """
    Parse an inequality over the letter universe of num variables
    """
    return parse_inequality(text, None if num is None else letters(num))


def assert_exit(function, code=0):
    """
    Assert that 'function' performs SystemExit with code
    """
    try:
        function()
    except SystemExit as ex:
        assert ex.code == code, "Expected exit code %r got %r" % (code, ex.code)
    else:
        assert False, "Expected SystemExit"


@contextlib.contextmanager
def create_tempdir():
    """
    A temporary directory removed afterwards
    """
    path = tempfile.mkdtemp()
    try:
        yield path
    finally:
        shutil.rmtree(path, ignore_errors=True)


class StubPrinter(object):
    """
    A stub of a ColorPrinter writing colors as {fg} tags
    """
    def __init__(self):
        self.output = ""

    def reset(self):
        self.output = ""

    def write(self, text, output_file=None, fg=None, bg=None):
        """
        ColorPrinter write stub
        """
        if fg is not None or bg is not None:
            self.output += "{"
        if fg is not None:
            self.output += fg
        if bg is not None:
            self.output += bg.upper()
        if fg is not None or bg is not None:
            self.output += "}"

        self.output += text

        if fg is not None or bg is not None:
            self.output += "{x}"
