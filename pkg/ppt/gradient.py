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
The add-one-point gradient ``grad_x F(omega) = F(omega + eps_x) - F(omega)``
and a few functionals with known Lipschitz behaviour.
"""

import logging

import numpy as np
from scipy import stats

from .errors import ValidationError, ZeroMassError
from .metrics import rho_by_name
from .processes.poisson import draw_poisson
from .seed import replicate

logger = logging.getLogger(__name__)


def grad_sharp(F, omega, x):
    return F(omega.add(x)) - F(omega)


def rademacher_check(F, sigma, n_samples, seed):
    """
    Largest ``|grad_x F(omega)|`` seen over ``n_samples`` draws of
    ``omega ~ Poisson(sigma)`` and ``x ~ sigma / sigma(Lambda)``. A
    functional that is 1-Lipschitz for rho0 or rho1 never exceeds 1.

    :raises ZeroMassError: when ``sigma`` has no mass to draw ``x`` from
    """
    if sigma.total_mass() <= 0:
        raise ZeroMassError("rademacher_check needs sigma(Lambda) > 0")

    def one(s):
        omega = draw_poisson(sigma, s.substream(0).rng())
        x = sigma.sample_points(1, s.substream(1).rng())[0]
        return abs(grad_sharp(F, omega, x))

    observed = max(replicate(one, n_samples, seed))
    logger.debug("rademacher check over %d draws: max %r", n_samples,
                 observed)
    return float(observed)


class CountFunctional(object):
    """ omega(K), or omega(Lambda) without a region. """

    def __init__(self, region=None, scale=1.0):
        self.region = region
        self.scale = scale

    def __call__(self, omega):
        n = omega.count() if self.region is None \
            else omega.count_in(self.region)
        return self.scale * n


def count_functional(region=None, scale=1.0):
    return CountFunctional(region, scale)


class TruncatedCount(object):
    """ min(omega(K), cap) """

    def __init__(self, cap, region=None):
        self.cap = cap
        self.region = region

    def __call__(self, omega):
        n = omega.count() if self.region is None \
            else omega.count_in(self.region)
        return min(n, self.cap)


def truncated_count(cap, region=None):
    return TruncatedCount(cap, region)


class DistanceFunctional(object):
    """ omega -> rho(omega, eta) for a fixed eta """

    def __init__(self, eta, metric='rho1'):
        self.eta = eta
        self.metric = metric
        self.rho = rho_by_name(metric)

    def __call__(self, omega):
        return self.rho(omega, self.eta)


def distance_functional(eta, metric='rho1'):
    return DistanceFunctional(eta, metric)


class CountEvent(object):
    """
    The indicator of ``{omega(K) == k}``, ``{omega(K) <= k}`` or
    ``{omega(K) >= k}``. ``K`` defaults to the whole window.

    Its probability and surface measure under a Poisson law are known in
    closed form: adding a point of ``K`` moves the count by one, so the
    gradient of the indicator is nonzero exactly on the counts where the
    event is entered or left.
    """

    KINDS = ('eq', 'le', 'ge')

    def __init__(self, kind, k, region=None):
        if kind not in self.KINDS:
            raise ValidationError("event kind must be one of %s"
                                  % ", ".join(self.KINDS), "event.kind")
        if int(k) != k or k < 0:
            raise ValidationError("event threshold must be a nonnegative "
                                  "integer", "event.k")
        self.kind = kind
        self.k = int(k)
        self.region = region

    def count(self, omega):
        return omega.count() if self.region is None \
            else omega.count_in(self.region)

    def __call__(self, omega):
        n = self.count(omega)
        if self.kind == 'eq':
            return 1.0 if n == self.k else 0.0
        if self.kind == 'le':
            return 1.0 if n <= self.k else 0.0
        return 1.0 if n >= self.k else 0.0

    def region_mass(self, sigma):
        if self.region is None:
            return sigma.total_mass()
        return sigma.mass_in(self.region)

    def probability(self, sigma):
        m = self.region_mass(sigma)
        if self.kind == 'eq':
            return float(stats.poisson.pmf(self.k, m))
        if self.kind == 'le':
            return float(stats.poisson.cdf(self.k, m))
        return float(stats.poisson.sf(self.k - 1, m))

    def surface_measure(self, sigma):
        """ E int |grad_x 1_A| dsigma(x) """
        m = self.region_mass(sigma)
        at_k = stats.poisson.pmf(self.k, m)
        below = stats.poisson.pmf(self.k - 1, m) if self.k > 0 else 0.0
        if self.kind == 'le':
            return float(m * at_k)
        if self.kind == 'ge':
            return float(m * below)
        return float(m * (at_k + below))

    def describe(self):
        op = {'eq': '==', 'le': '<=', 'ge': '>='}[self.kind]
        where = 'Lambda' if self.region is None else repr(self.region)
        return "omega(%s) %s %d" % (where, op, self.k)

    def __repr__(self):
        return "CountEvent(%r, %d, %r)" % (self.kind, self.k, self.region)
