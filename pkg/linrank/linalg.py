# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Exact linear algebra over the rationals, the integers and prime fields
"""

from fractions import Fraction
from sympy import Matrix, Rational, GF, QQ, ZZ
from sympy.ntheory import isprime
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors
from linrank.exceptions import ValidationError


def check_prime(prime):
    if not isprime(prime):
        raise ValidationError("%s is not prime" % prime)


def _is_empty(rows):
    return not rows or not rows[0]


def _rational_matrix(rows):
    return DomainMatrix.from_Matrix(
        Matrix([[Rational(value.numerator, value.denominator) if isinstance(value, Fraction) else value
                 for value in row] for row in rows])).convert_to(QQ)


def _to_fraction(value):
    return Fraction(int(value.numerator), int(value.denominator))


def exact_rank(rows):
    """
    Rank over the rationals of a list of integer or Fraction rows
    """
    if _is_empty(rows):
        return 0
    return _rational_matrix(rows).rank()


def rank_mod_p(rows, prime):
    """
    Rank over the field with prime elements of a list of integer rows
    """
    check_prime(prime)
    if _is_empty(rows):
        return 0
    return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(prime)).rank()


def nullspace(rows, num_cols):
    """
    Basis of the right nullspace {x : rows x = 0} as Fraction vectors
    """
    if num_cols == 0:
        return []
    if not rows:
        return [[Fraction(int(row == col)) for col in range(num_cols)] for row in range(num_cols)]
    basis = _rational_matrix(rows).nullspace()
    return [[_to_fraction(value) for value in vector] for vector in basis.to_list()]


def nullspace_mod_p(rows, num_cols, prime):
    """
    Basis of the right nullspace over the field with prime elements, entries in 0..prime-1
    """
    check_prime(prime)
    if num_cols == 0:
        return []
    if not rows:
        return [[int(row == col) for col in range(num_cols)] for row in range(num_cols)]
    field = GF(prime)
    basis = DomainMatrix.from_Matrix(Matrix(rows)).convert_to(field).nullspace()
    return [[int(field.to_int(value)) % prime for value in vector] for vector in basis.to_list()]


def elementary_divisors(rows):
    """
    The nonzero invariant factors of an integer matrix, their product is the
    greatest common divisor of the maximal nonzero minors
    """
    if _is_empty(rows):
        return []
    matrix = DomainMatrix.from_Matrix(Matrix(rows)).convert_to(ZZ)
    return [abs(int(factor)) for factor in invariant_factors(matrix) if factor != 0]


def transpose(rows, num_cols):
    return [[row[col] for row in rows] for col in range(num_cols)]
