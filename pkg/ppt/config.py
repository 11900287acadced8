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
Library-wide defaults. Functions read these at call time, so changing a
value here (as the command line does for ``THREADS``) affects later calls.
"""

import os

# relative error target of the quadrature layer
QUADRATURE_RTOL = 1e-8
QUADRATURE_ATOL = 1e-14
QUADRATURE_MAX_INTERVALS = 4000
# double integrals over window x window
PAIR_QUADRATURE_RTOL = 1e-7

# input marginals of a transport problem must sum to one within this
MARGINAL_TOL = 1e-12
# solved plans must reproduce their marginals within this
PLAN_TOL = 1e-9
# complementary slackness residual accepted from the LP solver
SLACKNESS_TOL = 1e-9

GIBBS_ACCEPTANCE_FLOOR = 1e-4
GIBBS_MAX_PROPOSALS = 100000

TIME_CHANGE_GRID = 10001
BISECTION_TOL = 1e-12

COAREA_MAX_THRESHOLDS = 10000

# Monte Carlo normalization checks warn beyond this many standard errors
NORMALIZATION_SIGMAS = 4.0

THREADS = max(1, int(os.environ.get('PPT_THREADS', '1') or 1))
