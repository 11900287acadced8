# PPT - Point Process Transport
# Copyright (C) 2026 The PPT Authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
Discrete optimal transport between two weighted finite families.
"""

import logging

import numpy as np
from scipy import sparse
from scipy.optimize import linprog

from .. import config
from ..errors import MarginalMismatchError, TransportError, ValidationError

logger = logging.getLogger(__name__)

INF = float('inf')


class CostMatrix(object):
    """
    An ``(n, m)`` matrix of nonnegative costs; ``inf`` entries mark pairs
    that cannot be coupled at finite cost.
    """

    def __init__(self, entries):
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2:
            raise ValidationError("cost matrix must be two dimensional",
                                  "cost")
        if np.any(np.isnan(entries)) or np.any(entries < 0):
            raise ValidationError("costs must be nonnegative numbers", "cost")
        entries.flags.writeable = False
        self.entries = entries

    @classmethod
    def from_families(cls, left, right, distance, threads=None):
        """
        Pairwise ``distance(l, r)`` over two lists; rows are computed in
        parallel.
        """
        from ..seed import fan_out
        rows = fan_out(lambda l: [distance(l, r) for r in right], left,
                       threads)
        return cls(np.array(rows, dtype=float).reshape(len(left), len(right)))

    @property
    def shape(self):
        return self.entries.shape

    def is_finite(self):
        return bool(np.all(np.isfinite(self.entries)))

    def submatrix(self, rows, cols):
        return CostMatrix(self.entries[np.ix_(rows, cols)])


class TransportPlan(object):

    def __init__(self, weights, row_marginals, col_marginals, cost,
                 slackness_residual=0.0):
        self.weights = weights
        self.row_marginals = row_marginals
        self.col_marginals = col_marginals
        self.cost = cost
        self.slackness_residual = slackness_residual

    def to_dict(self):
        """
        Sparse triplet form ``[[i, j, weight], ...]`` of the positive
        entries.
        """
        rows, cols = np.nonzero(self.weights > 0)
        return {'shape': list(self.weights.shape),
                'triplets': [[int(i), int(j), float(self.weights[i, j])]
                             for i, j in zip(rows, cols)],
                'cost': self.cost}


def check_marginal(v, name, n):
    v = np.asarray(v, dtype=float)
    if v.shape != (n,):
        raise ValidationError("%s must have length %d" % (name, n), name)
    if np.any(v < 0) or not np.all(np.isfinite(v)):
        raise MarginalMismatchError("%s must be a nonnegative vector" % name,
                                    name)
    if abs(v.sum() - 1.0) > config.MARGINAL_TOL:
        raise MarginalMismatchError("%s sums to %r, not 1" % (name, v.sum()),
                                    name)
    return v / v.sum()


def plan_cost(weights, entries):
    """ sum of weights * entries, with inf * 0 taken as 0 """
    used = weights > 0
    return float(np.sum(weights[used] * entries[used]))


def emd(a, b, C):
    """
    Exact optimal plan between ``a`` and ``b`` for the cost ``C``.

    Only finite entries become LP variables, so a problem in which every
    coupling meets an infinite cost is reported with ``cost = inf``.
    Optimality is checked by complementary slackness against the solver's
    duals.

    :rtype: :class:`TransportPlan`
    """
    if not isinstance(C, CostMatrix):
        C = CostMatrix(C)
    n, m = C.shape
    a = check_marginal(a, 'a', n)
    b = check_marginal(b, 'b', m)
    entries = C.entries

    finite = np.isfinite(entries)
    rows, cols = np.nonzero(finite)
    k = len(rows)
    if k == 0:
        return TransportPlan(np.outer(a, b), a, b, INF)

    c = entries[rows, cols]
    edge = np.arange(k)
    A = sparse.coo_matrix(
        (np.ones(2 * k), (np.concatenate([rows, n + cols]),
                          np.concatenate([edge, edge]))),
        shape=(n + m, k)).tocsr()
    rhs = np.concatenate([a, b])
    res = linprog(c, A_eq=A, b_eq=rhs, bounds=(0, None), method='highs-ds')
    if res.status == 2:
        logger.debug("no finite-cost coupling for a %dx%d problem", n, m)
        return TransportPlan(np.outer(a, b), a, b, INF)
    if res.status != 0:
        raise TransportError("LP solver failed: %s" % res.message)

    x = np.clip(res.x, 0.0, None)
    weights = np.zeros((n, m))
    weights[rows, cols] = x
    gap = max(np.max(np.abs(weights.sum(axis=1) - a)),
              np.max(np.abs(weights.sum(axis=0) - b)))
    if gap > config.PLAN_TOL:
        raise TransportError("solved plan misses its marginals by %.3g" % gap)

    y = res.eqlin.marginals
    reduced = c - y[rows] - y[n + cols]
    residual = float(np.max(np.abs(x * reduced)))
    scale = max(1.0, float(np.max(c)))
    if residual > config.SLACKNESS_TOL * scale:
        raise TransportError("complementary slackness residual %.3g"
                             % residual)
    if np.min(reduced) < -1e-7 * scale:
        logger.warning("dual infeasibility %.3g in transport LP",
                       -np.min(reduced))
    return TransportPlan(weights, a, b, plan_cost(weights, entries), residual)
