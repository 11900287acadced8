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

import logging

import numpy as np

from ..configuration import Configuration
from .process import PointProcess

logger = logging.getLogger(__name__)


def draw_poisson(sigma, rng):
    """
    Draw ``N ~ Poisson(sigma(Lambda))`` then ``N`` i.i.d. points from
    ``sigma / sigma(Lambda)``.
    """
    mass = sigma.total_mass()
    n = int(rng.poisson(mass)) if mass > 0 else 0
    return Configuration(sigma.sample_points(n, rng), sigma.window)


def sample_poisson(sigma, seed):
    """
    A draw of the Poisson process with intensity ``sigma``.

    :raises EnvelopeViolationError: when a proposal exceeds the declared
        ``density_sup`` of ``sigma``
    :rtype: :class:`Configuration`
    """
    return draw_poisson(sigma, seed.rng())


class PoissonProcess(PointProcess):

    def __init__(self, kind, sigma):
        super(PoissonProcess, self).__init__(kind, sigma.window)
        self.sigma = sigma

    def draw(self, rng):
        return draw_poisson(self.sigma, rng)

    def count_mean(self):
        return self.sigma.total_mass()

    def count_variance(self):
        return self.sigma.total_mass()


class PoissonDensity(object):
    """
    The density of the Poisson law with intensity ``p * sigma`` against the
    Poisson law with intensity ``sigma``::

        L(omega) = exp(sum_x log p(x) + int (1 - p) dsigma)
    """

    def __init__(self, p, sigma):
        self.p = p
        self.sigma = sigma
        breaks = tuple(p.breakpoints()) if hasattr(p, 'breakpoints') else ()
        self.offset = sigma.integrate(lambda pts: 1.0 - p(pts),
                                      breakpoints=breaks)

    def __call__(self, omega):
        if omega.is_empty():
            return float(np.exp(self.offset))
        with np.errstate(divide='ignore'):
            logs = np.log(np.asarray(self.p(omega.atoms), dtype=float))
        return float(np.exp(logs.sum() + self.offset))


def poisson_likelihood_ratio(p, sigma):
    return PoissonDensity(p, sigma)
