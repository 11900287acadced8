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

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..errors import NonSquareError, ValidationError


def assignment_solve(C):
    """
    Exact minimum-cost perfect matching on a square matrix of finite costs.

    The cost is summed in row order from the returned permutation, so it is
    reproducible bit for bit from ``(C, permutation)``.

    :param C: ``(n, n)`` array or :class:`CostMatrix`
    :returns: (permutation as an int array, cost)
    """
    C = np.asarray(getattr(C, 'entries', C), dtype=float)
    if C.ndim != 2 or C.shape[0] != C.shape[1]:
        raise NonSquareError("assignment needs a square matrix, got shape %r"
                             % (C.shape,), "cost")
    n = C.shape[0]
    if n == 0:
        return np.empty(0, dtype=int), 0.0
    if not np.all(np.isfinite(C)):
        raise ValidationError("assignment costs must be finite", "cost")
    rows, cols = linear_sum_assignment(C)
    perm = np.empty(n, dtype=int)
    perm[rows] = cols
    cost = sum(C[i, perm[i]] for i in range(n))
    return perm, float(cost)
