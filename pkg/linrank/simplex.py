# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Exact rational simplex for Farkas systems

Decides whether

  sum_k lambda_k a_k + sum_j mu_j h_j = t,  lambda >= 0,  mu free

has a solution.  The free columns are eliminated first by Gauss-Jordan
steps, then a phase one simplex with one implicit artificial variable per
remaining row minimizes the sum of the artificials.  Bland's rule keeps the
pivot sequence finite and deterministic.

Every row carries the combination of original rows it was built from.  When
the system is infeasible the objective row combination w is a Farkas
witness: w.a_k >= 0, w.h_j = 0 and w.t < 0.
"""

import logging
from fractions import Fraction
from math import gcd

LOGGER = logging.getLogger(__name__)


def _add_scaled(target, source, factor):
    for key, value in source.items():
        new = target.get(key, 0) + factor * value
        if new:
            target[key] = new
        else:
            target.pop(key, None)


def _scaled(source, factor):
    return dict((key, value * factor) for key, value in source.items())


def integer_direction(values):
    """
    Smallest integer vector with the direction of a rational vector
    """
    values = [Fraction(value) for value in values]
    multiple = 1
    for value in values:
        multiple = multiple * value.denominator // gcd(multiple, value.denominator)
    result = [int(value * multiple) for value in values]
    divisor = 0
    for value in result:
        divisor = gcd(divisor, abs(value))
    if divisor > 1:
        result = [value // divisor for value in result]
    return result


class SimplexResult(object):
    """
    Outcome of a Farkas system solve
    """
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNDECIDED = "undecided"

    def __init__(self, status, pivots, lambdas=None, mus=None, witness=None):
        self.status = status
        self.pivots = pivots
        self.lambdas = {} if lambdas is None else lambdas
        self.mus = {} if mus is None else mus
        self.witness = witness

    @property
    def feasible(self):
        return self.status == self.FEASIBLE

    @property
    def infeasible(self):
        return self.status == self.INFEASIBLE

    def __repr__(self):
        return "SimplexResult(%s, pivots=%i)" % (self.status, self.pivots)


class FarkasSystem(object):
    """
    Sparse Farkas system over num_rows coordinates

    columns and free_columns are lists of {row: value} maps, target is a
    {row: value} map.  Column indices of the nonnegative columns are kept in
    the result so a caller may pass a restricted subset through column_ids.
    """

    def __init__(self, num_rows, columns, free_columns, target, column_ids=None):
        self.num_rows = num_rows
        self.columns = [dict(column) for column in columns]
        self.free_columns = [dict(column) for column in free_columns]
        self.target = dict(target)
        if column_ids is None:
            column_ids = list(range(len(columns)))
        self.column_ids = list(column_ids)

    def restricted(self, keep):
        """
        The system with only the nonnegative columns at the positions in keep
        """
        keep = sorted(keep)
        return FarkasSystem(self.num_rows,
                            [self.columns[pos] for pos in keep],
                            self.free_columns,
                            self.target,
                            [self.column_ids[pos] for pos in keep])

    def solve(self, pivot_limit=10 ** 7):
        return _Tableau(self).run(pivot_limit)


class _Tableau(object):
    """
    Row oriented tableau with nonnegative columns 0..K-1, free columns
    K..K+M-1 and implicit artificials K+M+r
    """

    def __init__(self, system):
        self._system = system
        self._num_cols = len(system.columns)
        self._num_free = len(system.free_columns)
        num_rows = system.num_rows

        self._rows = [dict() for _ in range(num_rows)]
        for col, column in enumerate(system.columns):
            for row, value in column.items():
                if value:
                    self._rows[row][col] = Fraction(value)
        for offset, column in enumerate(system.free_columns):
            for row, value in column.items():
                if value:
                    self._rows[row][self._num_cols + offset] = Fraction(value)

        self._rhs = [Fraction(system.target.get(row, 0)) for row in range(num_rows)]
        self._track = [{row: Fraction(1)} for row in range(num_rows)]
        self._basis = [self._num_cols + self._num_free + row for row in range(num_rows)]
        self._free_rows = {}
        self._pivots = 0

    def _pivot(self, pivot_row, col, rows):
        """
        Make col a unit column with its one at pivot_row, eliminating it from rows
        """
        factor = 1 / self._rows[pivot_row][col]
        self._rows[pivot_row] = _scaled(self._rows[pivot_row], factor)
        self._rhs[pivot_row] *= factor
        self._track[pivot_row] = _scaled(self._track[pivot_row], factor)

        source = self._rows[pivot_row]
        for row in rows:
            if row == pivot_row:
                continue
            value = self._rows[row].get(col)
            if not value:
                continue
            _add_scaled(self._rows[row], source, -value)
            self._rhs[row] -= value * self._rhs[pivot_row]
            _add_scaled(self._track[row], self._track[pivot_row], -value)

        self._basis[pivot_row] = col
        self._pivots += 1

    def _eliminate_free_columns(self):
        all_rows = range(len(self._rows))
        for offset in range(self._num_free):
            col = self._num_cols + offset
            candidates = [row for row in all_rows
                          if row not in self._free_rows.values() and self._rows[row].get(col)]
            if not candidates:
                LOGGER.debug("Free column %i is dependent, its multiplier is zero", offset)
                continue
            pivot_row = candidates[0]
            self._pivot(pivot_row, col, all_rows)
            self._free_rows[offset] = pivot_row

    def run(self, pivot_limit):
        self._eliminate_free_columns()
        all_rows = range(len(self._rows))
        phase_rows = [row for row in all_rows if row not in self._free_rows.values()]

        for row in phase_rows:
            if self._rhs[row] < 0:
                self._rows[row] = _scaled(self._rows[row], -1)
                self._rhs[row] = -self._rhs[row]
                self._track[row] = _scaled(self._track[row], -1)

        objective = {}
        objective_rhs = Fraction(0)
        objective_track = {}
        for row in phase_rows:
            _add_scaled(objective, self._rows[row], -1)
            objective_rhs -= self._rhs[row]
            _add_scaled(objective_track, self._track[row], -1)

        while True:
            entering = [col for col, value in objective.items() if value < 0 and col < self._num_cols]
            if not entering:
                break

            if self._pivots >= pivot_limit:
                LOGGER.debug("Pivot limit %i reached", pivot_limit)
                return SimplexResult(SimplexResult.UNDECIDED, self._pivots)

            col = min(entering)
            leaving = None
            best = None
            for row in phase_rows:
                value = self._rows[row].get(col)
                if value is None or value <= 0:
                    continue
                ratio = self._rhs[row] / value
                if best is None or ratio < best or (ratio == best and self._basis[row] < self._basis[leaving]):
                    best = ratio
                    leaving = row

            # An unbounded direction is impossible, the artificial objective is bounded below
            assert leaving is not None

            self._pivot(leaving, col, all_rows)
            value = objective.get(col)
            _add_scaled(objective, self._rows[leaving], -value)
            objective_rhs -= value * self._rhs[leaving]
            _add_scaled(objective_track, self._track[leaving], -value)

        LOGGER.debug("Simplex finished after %i pivots", self._pivots)

        if objective_rhs < 0:
            witness = [objective_track.get(row, Fraction(0)) for row in all_rows]
            return SimplexResult(SimplexResult.INFEASIBLE, self._pivots, witness=witness)

        return self._feasible_result(phase_rows)

    def _feasible_result(self, phase_rows):
        lambdas = {}
        for row in phase_rows:
            col = self._basis[row]
            if col < self._num_cols and self._rhs[row] != 0:
                lambdas[col] = self._rhs[row]

        mus = {}
        for offset in range(self._num_free):
            if offset not in self._free_rows:
                continue
            row = self._free_rows[offset]
            value = self._rhs[row]
            for col, coefficient in self._rows[row].items():
                if col in lambdas:
                    value -= coefficient * lambdas[col]
            if value != 0:
                mus[offset] = value

        column_ids = self._system.column_ids
        return SimplexResult(SimplexResult.FEASIBLE, self._pivots,
                             lambdas=dict((column_ids[col], value) for col, value in lambdas.items()),
                             mus=mus)
