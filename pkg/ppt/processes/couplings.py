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
Explicit couplings of two point processes.

``SuperpositionCoupling`` realizes the Poisson laws of ``sigma`` and
``p * sigma`` as a common part plus independent extras. ``TimeChangeCoupling``
pairs standard Poisson atoms on the time axis with their images under the
inverse time change.
"""

import logging
import math

import numpy as np

from ..configuration import Configuration
from ..errors import ValidationError
from ..metrics import rho1
from ..seed import replicate
from ..window import Window
from .poisson import draw_poisson

logger = logging.getLogger(__name__)


class CoupledPair(object):

    def __init__(self, left, right, cost_hint=None):
        if left.dim != right.dim:
            raise ValidationError("coupled configurations need a common "
                                  "dimension")
        self.left = left
        self.right = right
        self.cost_hint = cost_hint

    def to_dict(self):
        return {'left': self.left.to_list(),
                'right': self.right.to_list(),
                'cost_hint': self.cost_hint}


class Coupling(object):

    def sample(self, seed):
        raise NotImplementedError

    def sample_many(self, n, seed, threads=None):
        return replicate(self.sample, n, seed, threads)


class SuperpositionCoupling(Coupling):
    """
    Three independent Poisson configurations with intensities
    ``min(p, 1) sigma``, ``(1 - p)^+ sigma`` and ``(p - 1)^+ sigma``; the
    left configuration is the sum of the first two, the right one the sum of
    the first and the third.

    :param p: vectorized density of the target intensity against ``sigma``
    :param p_sup: an upper bound of ``p`` on the window; parsed expressions
        supply their own
    """

    def __init__(self, sigma, p, p_sup=None):
        if p_sup is None:
            if not hasattr(p, 'sup_on'):
                raise ValidationError("p_sup is required for plain functions",
                                      "p_sup")
            p_sup = p.sup_on(sigma.window)
            if hasattr(p, 'inf_on') and p.inf_on(sigma.window) < 0:
                raise ValidationError("p must be nonnegative", "p")
        p_sup = float(p_sup)
        self.sigma = sigma
        self.p = p
        breaks = tuple(p.breakpoints()) if hasattr(p, 'breakpoints') else ()
        self.common = sigma.reweighted(lambda x: np.minimum(p(x), 1.0),
                                       min(p_sup, 1.0), breaks)
        self.left_extra = sigma.reweighted(
            lambda x: np.maximum(1.0 - p(x), 0.0), 1.0, breaks)
        self.right_extra = sigma.reweighted(
            lambda x: np.maximum(p(x) - 1.0, 0.0), max(p_sup - 1.0, 0.0),
            breaks)
        logger.debug("superposition coupling masses %r %r %r",
                     self.common.total_mass(), self.left_extra.total_mass(),
                     self.right_extra.total_mass())

    def expected_cost(self):
        """ int |p - 1| dsigma """
        return self.left_extra.total_mass() + self.right_extra.total_mass()

    def sample(self, seed):
        omega0 = draw_poisson(self.common, seed.substream(0).rng())
        omega1 = draw_poisson(self.left_extra, seed.substream(1).rng())
        omega2 = draw_poisson(self.right_extra, seed.substream(2).rng())
        left = omega0.superpose(omega1)
        right = omega0.superpose(omega2)
        return CoupledPair(left, right, float(rho1(left, right)))


def sample_coupled_superposition(sigma, p, seed, p_sup=None):
    """
    :rtype: :class:`CoupledPair` with ``cost_hint = rho1(left, right)``
    """
    return SuperpositionCoupling(sigma, p, p_sup).sample(seed)


class TimeChangeCoupling(Coupling):
    """
    Right atoms are standard Poisson atoms ``r_i`` on ``[0, v(T)]``, left
    atoms are ``t_i = v^{-1}(r_i)``. Both live on ``[0, max(T, v(T))]``.
    """

    def __init__(self, tc):
        self.tc = tc
        self.end = tc.end()
        self.window = Window([0.0], [max(tc.horizon, self.end)])

    def sample(self, seed):
        rng = seed.rng()
        n = int(rng.poisson(self.end))
        r = np.sort(rng.uniform(0.0, self.end, n))
        t = self.tc.v_inverse(r) if n else np.empty(0)
        t = np.clip(t, 0.0, self.tc.horizon)
        # the identity pairing of t_i with r_i = v(t_i); the gap is U(t_i)
        cost = math.sqrt(float(np.sum((r - t) ** 2)))
        return CoupledPair(Configuration(t, self.window),
                           Configuration(r, self.window), cost)


def sample_coupled_timechange(tc, seed):
    """
    :rtype: :class:`CoupledPair` whose ``cost_hint`` dominates
        ``rho2(left, right)``
    """
    return TimeChangeCoupling(tc).sample(seed)
