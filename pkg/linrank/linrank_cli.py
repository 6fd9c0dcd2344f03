# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Command line interface
----------------------

A :class:`.LinRankCLI` object has a ``parser`` field which is an
`ArgumentParser` object of the `argparse`_ library, more arguments can be
added to it before parsing.

.. _argparse: https://docs.python.org/3/library/argparse.html

.. code-block:: python

   from linrank.linrank_cli import LinRankCLI
   from linrank.ui import LinRank

   cli = LinRankCLI()
   args = cli.parse_args(["prove", "catalog:(1)"])
   LinRank.from_args(args).main()

Every command exits with 0 on success, 1 when refuted or violated, 2 when
undecided and 3 on usage or format errors.
"""

import argparse
from fractions import Fraction
from os.path import join, abspath
import os
from sympy.ntheory import isprime
from linrank.families import FAMILIES
from linrank.inequality_sets import INEQUALITY_SETS

USAGE_ERROR = 3


class LinRankArgumentParser(argparse.ArgumentParser):
    """
    Exits with the usage error code instead of the argparse default of 2
    """

    def error(self, message):
        self.print_usage()
        self.exit(USAGE_ERROR, "%s: error: %s\n" % (self.prog, message))


class LinRankCLI(object):
    """
    linrank command line interface
    """

    def __init__(self, description=None):
        """
        :param description: A custom short description of the command line tool
        """
        self.parser = _create_argument_parser(description)

    def parse_args(self, argv=None):
        """
        Parse command line arguments

        :param argv: Use explicit argv instead of actual command line argument
        :returns: The parsed argument namespace object
        """
        return self.parser.parse_args(args=argv)


def _create_argument_parser(description=None, for_documentation=False):
    """
    Create the argument parser

    :param description: A custom short description of the command line tool
    :param for_documentation: When used for user guide documentation
    :returns: The created :mod:`argparse` parser object
    """
    description = 'linrank command line tool.' if description is None else description

    if for_documentation:
        default_output_path = "./linrank_out"
    else:
        default_output_path = join(abspath(os.getcwd()), "linrank_out")

    parser = LinRankArgumentParser(description=description)

    parser.add_argument('-o', '--output-path',
                        default=default_output_path,
                        help='Output path for artifacts of inline and catalog inputs, '
                        'artifacts of file inputs are written beside the file')

    parser.add_argument('--no-color', action='store_true',
                        default=False,
                        help='Do not color output')

    parser.add_argument('--log-level',
                        default="warning",
                        choices=["info", "error", "warning", "debug"],
                        help="Log level of linrank internal python logging")

    parser.add_argument('-p', '--num-threads', type=positive_int,
                        default=1,
                        help='Number of catalog entries to prove in parallel')

    parser.add_argument('-x', '--xunit-xml',
                        default=None,
                        help='Xunit report .xml file of a catalog run')

    parser.add_argument('--pivot-limit', type=positive_int,
                        default=10 ** 7,
                        help='Give up a proof as undecided after this many simplex pivots')

    parser.add_argument('--no-warm-start', action='store_true',
                        default=False,
                        help='Do not use the floating point solver to guess the proof support')

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    prove = subparsers.add_parser('prove', help='Prove an inequality')
    prove.add_argument('inequality',
                       help='Inequality file, inline inequality or catalog:(tag)')
    prove.add_argument('--hypotheses', default=None,
                       help='File of common information declarations such as Z = CI(A ; B)')
    prove.add_argument('--k', type=rational, default=None,
                       help='Prove the hypothesis free slack form with this slack factor')

    catalog = subparsers.add_parser('catalog', help='Prove the catalog entries with their recipes')
    catalog.add_argument('tag_patterns', metavar='tags', nargs='*',
                         default=['*'],
                         help='Entries to prove, shell style patterns')
    catalog.add_argument('-l', '--list', action='store_true',
                         default=False,
                         help='Only list the entries')
    catalog.add_argument('--drop-hypothesis', action='append', type=tag_and_index,
                         default=[],
                         help='Remove the recipe declaration <tag>:<index> before proving')

    check_ray = subparsers.add_parser('check-ray', help='Check a rank vector against an inequality set')
    check_ray.add_argument('vector', help='Rank vector file')
    check_ray.add_argument('--ineq-set', choices=INEQUALITY_SETS,
                           default="full-catalog",
                           help='Inequalities to check against')

    represent = subparsers.add_parser('represent', help='Search for a linear representation of a rank vector')
    represent.add_argument('vector', help='Rank vector file')
    represent.add_argument('--permutations', type=positive_int, default=None,
                           help='Number of variable orders to try, all orders up to six variables')
    represent.add_argument('--seed', type=seed_int, default=None,
                           help='Also build matrices following the trace with this seed')
    represent.add_argument('--prime', type=prime_int, default=None,
                           help='Field size for building the matrices')

    ranks = subparsers.add_parser('ranks', help='Rank vector of a matrix file')
    ranks.add_argument('matrices', help='Matrix file')
    ranks.add_argument('--prime', type=prime_int, default=None,
                       help='Compute ranks over the field with this many elements')

    family = subparsers.add_parser('family', help='Print a member of an infinite family')
    family.add_argument('kind', choices=sorted(FAMILIES))
    family.add_argument('n', type=int)

    forest = subparsers.add_parser('forest', help='Print the inequality of a forest specification')
    forest.add_argument('spec', help='Forest specification file or catalog:(tag)')

    verify = subparsers.add_parser('verify', help='Re-check a stored certificate or witness')
    verify.add_argument('artifact', help='.cert or .witness file')

    return parser


def _int_type(accept, description):
    """
    An argparse type of the ints accepted by the predicate
    """
    def convert(val):
        try:
            ival = int(val)
        except ValueError:
            ival = None
        if ival is None or not accept(ival):
            raise argparse.ArgumentTypeError("'%s' is not %s" % (val, description))
        return ival
    return convert


positive_int = _int_type(lambda ival: ival > 0, "a valid positive int")
prime_int = _int_type(isprime, "a prime")
seed_int = _int_type(lambda ival: 0 <= ival < 2 ** 64, "a valid unsigned 64 bit seed")


def rational(val):
    try:
        return Fraction(val)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("'%s' is not a valid rational number" % val)


def tag_and_index(val):
    """
    (18):1 -> ('(18)', 1)
    """
    tag, _, index = val.rpartition(":")
    if tag and index.isdigit():
        return tag, int(index)
    raise argparse.ArgumentTypeError("'%s' is not <tag>:<index>" % val)


def _parser_for_documentation():
    """
    Returns an argparse object used by sphinx for documentation in the user guide
    """
    return _create_argument_parser(for_documentation=True)
