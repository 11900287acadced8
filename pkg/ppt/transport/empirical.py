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
Estimating Rubinstein distances from samples of the two laws.

The primal estimate is the optimal transport cost between the two empirical
measures; the dual estimate is the mean difference of one Lipschitz
functional. Any dual value is a lower bound of the distance.
"""

import logging
import math

import numpy as np

from ..errors import LipschitzViolationError, ValidationError
from ..metrics import quantize, rho_by_name
from ..seed import Estimate, SeedSpec
from .assignment import assignment_solve
from .emd import CostMatrix, emd

logger = logging.getLogger(__name__)

BOOTSTRAP_RESAMPLES = 16


def empirical_cost(C):
    """
    Optimal cost between uniform weights on the rows and the columns of
    ``C``. Square finite problems go through the assignment solver, since
    permutation plans are optimal among all plans.
    """
    n, m = C.shape
    if n == m and C.is_finite():
        perm, cost = assignment_solve(C)
        return cost / n
    return emd(np.full(n, 1.0 / n), np.full(m, 1.0 / m), C).cost


def estimate_rubinstein_empirical(samples_mu, samples_nu, metric='rho1',
                                  cells=None, seed=None,
                                  n_bootstrap=BOOTSTRAP_RESAMPLES,
                                  threads=None):
    """
    Transport cost between the empirical measures of two sample lists.

    ``extra`` carries the estimate from the first halves of both lists as a
    convergence diagnostic, and the sample sizes. ``std_error`` is a
    bootstrap standard error; it is 0 when the estimate is infinite, which
    happens for rho2 when counts cannot be matched.

    :param cells: quantize configurations to this grid before taking
        distances
    :rtype: :class:`Estimate`
    """
    if not samples_mu or not samples_nu:
        raise ValidationError("both sample lists must be nonempty", "samples")
    seed = seed or SeedSpec(0)
    rho = rho_by_name(metric)
    if cells is not None:
        samples_mu = [quantize(w, cells) for w in samples_mu]
        samples_nu = [quantize(w, cells) for w in samples_nu]
    C = CostMatrix.from_families(samples_mu, samples_nu, rho, threads)
    n, m = C.shape
    value = empirical_cost(C)

    extra = {'n_mu': n, 'n_nu': m, 'metric': metric}
    if n >= 2 and m >= 2:
        extra['half_sample'] = empirical_cost(
            C.submatrix(np.arange(n // 2), np.arange(m // 2)))

    std_error = 0.0
    if math.isfinite(value) and n_bootstrap > 1:
        boot = []
        for b in range(n_bootstrap):
            rng = seed.substream(b).rng()
            rows = rng.integers(0, n, n)
            cols = rng.integers(0, m, m)
            boot.append(empirical_cost(C.submatrix(rows, cols)))
        boot = np.asarray(boot)
        std_error = float(np.std(boot, ddof=1)) \
            if np.all(np.isfinite(boot)) else float('inf')
    logger.debug("empirical %s transport %dx%d: %r (+/- %r)", metric, n, m,
                 value, std_error)
    return Estimate(value, std_error, min(n, m), seed, extra=extra)


def dual_lower_bound(F, samples_mu, samples_nu, sigma=None, n_check=0,
                     seed=None):
    """
    ``mean F(samples_nu) - mean F(samples_mu)`` with the combined standard
    error. For ``F`` 1-Lipschitz this lower-bounds the Rubinstein distance.

    With ``sigma`` and ``n_check > 0`` the Lipschitz claim is spot-checked
    through :func:`rademacher_check` first.

    :raises LipschitzViolationError: when the spot check sees a gradient
        above 1
    """
    if not samples_mu or not samples_nu:
        raise ValidationError("both sample lists must be nonempty", "samples")
    seed = seed or SeedSpec(0)
    if sigma is not None and n_check > 0:
        from ..gradient import rademacher_check
        worst = rademacher_check(F, sigma, n_check, seed.substream(0))
        if worst > 1 + 1e-12:
            raise LipschitzViolationError(
                "functional has a gradient of %r > 1" % worst)
    mu = Estimate.from_samples([F(w) for w in samples_mu], seed)
    nu = Estimate.from_samples([F(w) for w in samples_nu], seed)
    se = math.sqrt(mu.std_error ** 2 + nu.std_error ** 2)
    return Estimate(nu.mean - mu.mean, se, min(mu.n_samples, nu.n_samples),
                    seed, extra={'mean_mu': mu.mean, 'mean_nu': nu.mean})
