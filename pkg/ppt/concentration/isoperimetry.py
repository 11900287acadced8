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
Surface measures, isoperimetric ratios, the L1 Poincare inequality and the
co-area formula for functionals of a Poisson process.

For an event ``A`` the surface measure is ``E int |grad_x 1_A| dsigma(x)``
and the isoperimetric ratio of ``A`` is
``2 surface(A) / (P(A) (1 - P(A)))``.
"""

import logging
import math

import numpy as np

from .. import config
from ..errors import CoareaRangeError, DegenerateEventError, ValidationError
from ..processes.poisson import draw_poisson
from ..seed import Estimate, replicate

logger = logging.getLogger(__name__)

ALTERNATIVE_CONSTANT = 8.0


def paired_values(F, sigma, n_samples, seed):
    """
    ``(F(omega), F(omega + eps_x))`` over ``n_samples`` replicates, with
    ``omega`` from sub-stream ``(i, 0)`` and ``x ~ sigma / sigma(Lambda)``
    from sub-stream ``(i, 1)``.
    """
    mass = sigma.total_mass()

    def one(s):
        omega = draw_poisson(sigma, s.substream(0).rng())
        f = F(omega)
        if mass == 0:
            return f, f
        x = sigma.sample_points(1, s.substream(1).rng())[0]
        return f, F(omega.add(x))

    pairs = replicate(one, n_samples, seed)
    before = np.array([p[0] for p in pairs], dtype=float)
    after = np.array([p[1] for p in pairs], dtype=float)
    return before, after


def exact_surface(A, sigma):
    if hasattr(A, 'surface_measure'):
        return A.surface_measure(sigma)
    return None


def surface_measure(A, sigma, n_samples, seed):
    """
    Monte Carlo of the surface measure of the event with indicator ``A``.
    Count events (:class:`CountEvent`) also carry the exact value.

    :rtype: :class:`Estimate`
    """
    before, after = paired_values(A, sigma, n_samples, seed)
    grads = sigma.total_mass() * np.abs(after - before)
    return Estimate.from_samples(grads, seed, exact_surface(A, sigma))


def exact_ratio(A, sigma):
    if not hasattr(A, 'probability'):
        return None
    p = A.probability(sigma)
    if p <= 0 or p >= 1:
        raise DegenerateEventError("event has probability %r" % p)
    return 2.0 * A.surface_measure(sigma) / (p * (1.0 - p))


def isoperimetric_ratio(A, sigma, n_samples, seed):
    """
    ``2 surface(A) / (P(A) (1 - P(A)))`` estimated from one set of draws,
    with a delta-method standard error. Count events carry the exact ratio.

    :raises DegenerateEventError: when the estimated ``P(A)`` is 0 or 1
    """
    before, after = paired_values(A, sigma, n_samples, seed)
    grads = sigma.total_mass() * np.abs(after - before)
    p = float(np.mean(before))
    if p <= 0 or p >= 1:
        raise DegenerateEventError("estimated P(A) = %r" % p)
    s = float(np.mean(grads))
    q = p * (1 - p)
    ratio = 2 * s / q
    se = 0.0
    if n_samples > 1:
        cov = np.cov(np.vstack([grads, before]))
        jac = np.array([2 / q, -2 * s * (1 - 2 * p) / (q * q)])
        se = math.sqrt(max(float(jac @ cov @ jac), 0.0) / n_samples)
    return Estimate(ratio, se, n_samples, seed, exact_ratio(A, sigma),
                    extra={'probability': p, 'surface': s})


def poincare_l1_check(F, sigma, n_samples, seed):
    """
    Both sides of ``E|F - E F| <= 2 E int |grad_x F| dsigma(x)``.

    :returns: (lhs, rhs) as :class:`Estimate`
    """
    before, after = paired_values(F, sigma, n_samples, seed)
    lhs = Estimate.from_samples(np.abs(before - before.mean()), seed)
    rhs = Estimate.from_samples(
        2.0 * sigma.total_mass() * np.abs(after - before), seed)
    return lhs, rhs


def coarea_check(F, sigma, n_samples, seed, max_thresholds=None):
    """
    Both sides of the co-area formula for an integer valued ``F``: the
    gradient mass of ``F`` and the sum over half-integer levels ``t`` of the
    gradient mass of ``1{F > t}``.

    :raises CoareaRangeError: when the observed range of ``F`` needs more
        than ``max_thresholds`` levels
    :returns: (lhs, rhs) as :class:`Estimate`
    """
    max_thresholds = max_thresholds or config.COAREA_MAX_THRESHOLDS
    before, after = paired_values(F, sigma, n_samples, seed)
    both = np.concatenate([before, after])
    if not np.all(both == np.round(both)):
        raise ValidationError("coarea check needs an integer valued "
                              "functional", "F")
    lo, hi = int(both.min()), int(both.max())
    if hi - lo > max_thresholds:
        raise CoareaRangeError((lo, hi), max_thresholds)
    mass = sigma.total_mass()
    levels = np.arange(lo, hi) + 0.5
    crossed = np.abs((after[:, None] > levels).astype(float)
                     - (before[:, None] > levels).astype(float)).sum(axis=1)
    lhs = Estimate.from_samples(mass * np.abs(after - before), seed)
    rhs = Estimate.from_samples(mass * crossed, seed,
                                extra={'levels': len(levels)})
    return lhs, rhs


def isoperimetric_bounds(total_mass):
    """ (1, m / (1 - e^{-m})) """
    if not total_mass > 0:
        raise ValidationError("total mass must be positive", "total_mass")
    return 1.0, total_mass / -math.expm1(-total_mass)


def empty_event_ratio(total_mass):
    """
    Exact isoperimetric ratio of ``{omega(Lambda) = 0}``:
    ``2 m / (1 - e^{-m})``.
    """
    return 2.0 * total_mass / -math.expm1(-total_mass)


def isoperimetric_report(total_mass):
    """
    The exact ratio of the empty-configuration event next to the two-sided
    bound ``1 <= h <= m / (1 - e^{-m})`` and the alternative upper bound
    ``8 + 8 sqrt(m)``. The ratio of that event is exactly twice the stated
    upper bound; ``factor_two_discrepancy`` flags it.
    """
    lower, upper = isoperimetric_bounds(total_mass)
    witness = empty_event_ratio(total_mass)
    flagged = witness > upper * (1 + 1e-12)
    if flagged:
        logger.info("empty-event ratio %.6g exceeds stated bound %.6g by a "
                    "factor %.6g", witness, upper, witness / upper)
    return {'total_mass': total_mass,
            'lower': lower,
            'stated_upper': upper,
            'witness_ratio': witness,
            'witness_over_stated': witness / upper,
            'alternative_upper': ALTERNATIVE_CONSTANT
            + ALTERNATIVE_CONSTANT * math.sqrt(total_mass),
            'factor_two_discrepancy': bool(flagged)}


def stirling_bounds(N):
    """
    ``sqrt(2 pi) N^(N + 1/2) e^(-N) <= N! <= sqrt(2 pi) N^(N + 1/2)
    e^(-N + 1/(12 N))``

    :returns: (lower, upper)
    """
    if int(N) != N or N < 1:
        raise ValidationError("N must be a positive integer", "N")
    N = int(N)
    log_lower = 0.5 * math.log(2 * math.pi) + (N + 0.5) * math.log(N) - N
    return math.exp(log_lower), math.exp(log_lower + 1.0 / (12 * N))
