# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
#
# Copyright (c) 2016-2017, linrank contributors

"""
Floating point warm start for Farkas systems

HiGHS solves the system in double precision.  Its answer is only a hint:
a primal support is re-solved with the exact simplex and a dual ray is
recomputed as an exact nullspace.  Anything that does not check out
exactly is rejected and the caller solves the full system exactly.
"""

import logging
from fractions import Fraction
import numpy as np
from scipy.optimize import linprog
from scipy.sparse import coo_matrix, vstack
from linrank.linalg import nullspace
from linrank.simplex import SimplexResult

LOGGER = logging.getLogger(__name__)

SUPPORT_TOLERANCE = 1e-9
TIGHT_TOLERANCE = 1e-7


def _sparse_columns(columns, num_rows):
    rows, cols, data = [], [], []
    for col, column in enumerate(columns):
        for row, value in column.items():
            rows.append(row)
            cols.append(col)
            data.append(float(value))
    return coo_matrix((data, (rows, cols)), shape=(num_rows, len(columns))).tocsr()


def _dense_target(system):
    target = np.zeros(system.num_rows)
    for row, value in system.target.items():
        target[row] = float(value)
    return target


def _dot(column, vector):
    return sum((value * vector[row] for row, value in column.items()), Fraction(0))


def _warm_primal(system, pivot_limit, result):
    support = [col for col in range(len(system.columns)) if result.x[col] > SUPPORT_TOLERANCE]
    LOGGER.debug("Warm start support has %i of %i columns", len(support), len(system.columns))
    exact = system.restricted(support).solve(pivot_limit)
    if exact.feasible:
        return exact
    return None


def _warm_dual(system):
    num_rows = system.num_rows
    columns = _sparse_columns(system.columns, num_rows)
    target = _dense_target(system)

    a_ub = -columns.transpose()
    a_ub = vstack([a_ub, coo_matrix(-target.reshape(1, -1))]).tocsr()
    b_ub = np.zeros(a_ub.shape[0])
    b_ub[-1] = 1.0

    a_eq = None
    b_eq = None
    if system.free_columns:
        a_eq = _sparse_columns(system.free_columns, num_rows).transpose().tocsr()
        b_eq = np.zeros(len(system.free_columns))

    result = linprog(target, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b_eq,
                     bounds=[(None, None)] * num_rows, method="highs-ds")
    if result.status != 0:
        LOGGER.debug("Warm start dual solve failed: %s", result.message)
        return None

    products = columns.transpose().dot(result.x)
    tight = [col for col in range(len(system.columns)) if abs(products[col]) <= TIGHT_TOLERANCE]

    def dense(column):
        return [column.get(row, 0) for row in range(num_rows)]

    rows = [dense(system.columns[col]) for col in tight] + [dense(column) for column in system.free_columns]
    basis = nullspace(rows, num_rows)
    if len(basis) != 1:
        LOGGER.debug("Tight constraints leave a %i dimensional nullspace", len(basis))
        return None

    witness = basis[0]
    value = _dot(system.target, witness)
    if value == 0:
        return None
    if value > 0:
        witness = [-entry for entry in witness]

    if any(_dot(column, witness) < 0 for column in system.columns):
        return None
    if any(_dot(column, witness) != 0 for column in system.free_columns):
        return None
    return SimplexResult(SimplexResult.INFEASIBLE, 0, witness=witness)


def warm_solve(system, pivot_limit):
    """
    Solve with a floating point hint, None when the hint is rejected
    """
    num_cols = len(system.columns)
    num_free = len(system.free_columns)
    matrix = _sparse_columns(system.columns + system.free_columns, system.num_rows)
    cost = np.concatenate([np.ones(num_cols), np.zeros(num_free)])
    bounds = [(0, None)] * num_cols + [(None, None)] * num_free

    result = linprog(cost, A_eq=matrix, b_eq=_dense_target(system), bounds=bounds, method="highs-ds")

    if result.status == 0:
        exact = _warm_primal(system, pivot_limit, result)
    elif result.status == 2:
        exact = _warm_dual(system)
    else:
        LOGGER.debug("Warm start primal solve ended with status %i: %s", result.status, result.message)
        exact = None

    if exact is None:
        LOGGER.warning("Warm start rejected, solving the full system exactly")
    return exact
