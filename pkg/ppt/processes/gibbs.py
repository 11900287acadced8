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
Gibbs processes with density ``e^{-V} / Z`` against a Poisson law, for a
nonnegative pair potential ``phi``::

    V(omega) = sum over ordered pairs (x, y) of atoms of phi(x - y)

The diagonal pairs ``x = y`` contribute ``phi(0)`` each unless the potential
is built with ``include_diagonal=False``.
"""

import logging
import math

import numpy as np
from scipy import stats

from .. import config
from ..configuration import Configuration
from ..errors import GibbsHardnessError, ValidationError
from ..expressions import RadialExpression
from ..intensity import pointwise
from ..seed import Estimate, replicate
from .poisson import draw_poisson
from .process import PointProcess

logger = logging.getLogger(__name__)


class PairPotential(object):
    """
    :param phi: vectorized function of difference vectors ``(n, d) -> (n,)``,
        or a parsed :class:`RadialExpression`
    """

    def __init__(self, phi, include_diagonal=True, vectorized=True,
                 constant_value=None):
        if not vectorized:
            phi = pointwise(phi)
        self.phi = phi
        self.include_diagonal = include_diagonal
        self.constant_value = constant_value
        self.expr = getattr(phi, 'expr', None)

    @classmethod
    def constant(cls, c, include_diagonal=True):
        c = float(c)
        if c < 0:
            raise ValidationError("pair potential must be nonnegative", "phi")
        return cls(lambda z: np.full(len(np.atleast_2d(z)), c),
                   include_diagonal, constant_value=c)

    def __call__(self, diffs):
        return np.asarray(self.phi(np.atleast_2d(diffs)), dtype=float)

    def is_radial(self):
        return isinstance(self.phi, RadialExpression)

    def breakpoints(self):
        """ Distances where a parsed potential jumps. """
        return self.phi.breakpoints() if self.is_radial() else ()

    def at_zero(self, d):
        return float(self(np.zeros((1, d)))[0])

    def energy(self, omega):
        """ V(omega) """
        n = omega.count()
        if n == 0:
            return 0.0
        x = omega.atoms
        diffs = (x[:, None, :] - x[None, :, :]).reshape(n * n, -1)
        vals = self(diffs).reshape(n, n)
        if np.any(vals < 0):
            raise ValidationError("pair potential took the negative value %r"
                                  % float(vals.min()), "phi")
        if not self.include_diagonal:
            vals[np.diag_indices(n)] = 0.0
        return float(vals.sum())

    def to_dict(self):
        return {'phi': self.expr if self.expr else repr(self.phi),
                'include_diagonal': self.include_diagonal}


class GibbsDensity(object):
    """
    The functional ``omega -> e^{-V(omega)} / normalizer``. With the default
    normalizer 1 this is the unnormalized density.
    """

    def __init__(self, potential, normalizer=1.0):
        if not normalizer > 0:
            raise ValidationError("normalizer must be positive", "normalizer")
        self.potential = potential
        self.normalizer = float(normalizer)

    def __call__(self, omega):
        return math.exp(-self.potential.energy(omega)) / self.normalizer


def constant_acceptance(c, mass, include_diagonal=True):
    """
    E[e^{-c N^2}] (or E[e^{-c N(N-1)}] without the diagonal) for
    ``N ~ Poisson(mass)``, by direct series summation. This is the
    acceptance probability of rejection sampling for a constant potential.
    """
    if mass == 0:
        return 1.0
    top = int(stats.poisson.isf(1e-17, mass)) + 10
    k = np.arange(top + 1)
    energy = c * (k * k if include_diagonal else k * (k - 1))
    return float(np.sum(np.exp(-energy) * stats.poisson.pmf(k, mass)))


def normalizing_constant(potential, sigma, n_samples, seed):
    """
    Monte Carlo estimate of ``Z = E[e^{-V}]`` under the Poisson law of
    ``sigma``; ``exact`` is filled in for constant potentials.

    :rtype: :class:`Estimate`
    """
    values = replicate(
        lambda s: math.exp(-potential.energy(draw_poisson(sigma, s.rng()))),
        n_samples, seed)
    exact = None
    if potential.constant_value is not None:
        exact = constant_acceptance(potential.constant_value,
                                    sigma.total_mass(),
                                    potential.include_diagonal)
    return Estimate.from_samples(values, seed, exact)


def proposal_budget(max_proposals=None):
    """
    Proposals allowed per draw: ``1 / GIBBS_ACCEPTANCE_FLOOR``, capped by
    ``max_proposals`` (default ``GIBBS_MAX_PROPOSALS``).
    """
    cap = max_proposals or config.GIBBS_MAX_PROPOSALS
    floor = config.GIBBS_ACCEPTANCE_FLOOR
    if floor > 0:
        cap = min(cap, int(math.ceil(1.0 / floor)))
    return cap


def draw_gibbs(potential, sigma, rng, max_proposals=None):
    """
    Exact rejection sampling: propose from the Poisson law of ``sigma`` and
    accept with probability ``e^{-V}``.

    :returns: (configuration, number of proposals used)
    :raises GibbsHardnessError: when :func:`proposal_budget` proposals are
        all rejected, i.e. the acceptance rate is below the floor
    """
    max_proposals = proposal_budget(max_proposals)
    if sigma.total_mass() == 0:
        return Configuration.empty(sigma.window), 1
    energies = []
    for k in range(1, max_proposals + 1):
        omega = draw_poisson(sigma, rng)
        v = potential.energy(omega)
        if rng.random() < math.exp(-v):
            return omega, k
        if len(energies) < 1000:
            energies.append(v)
    raise GibbsHardnessError(
        "no proposal accepted", {
            'proposals': max_proposals,
            'acceptance_floor': config.GIBBS_ACCEPTANCE_FLOOR,
            'observed_rate': 0.0,
            'mean_energy': float(np.mean(energies)),
            'total_mass': sigma.total_mass()})


def acceptance_estimate(k, seed):
    rate = 1.0 / k
    se = math.sqrt(rate * (1 - rate) / k)
    return Estimate(rate, se, k, seed)


def sample_gibbs(phi, sigma, seed, max_proposals=None):
    """
    A draw from the Gibbs law of the pair potential ``phi`` and the
    acceptance rate observed while producing it.

    :param phi: a :class:`PairPotential`, or a plain vectorized potential
        (the diagonal is then included)
    :returns: (configuration, :class:`Estimate` of the acceptance rate)
    :raises GibbsHardnessError: when the acceptance rate is below
        ``GIBBS_ACCEPTANCE_FLOOR``
    """
    if not isinstance(phi, PairPotential):
        phi = PairPotential(phi)
    omega, k = draw_gibbs(phi, sigma, seed.rng(), max_proposals)
    if 1.0 / k < config.GIBBS_ACCEPTANCE_FLOOR:
        raise GibbsHardnessError(
            "acceptance rate below floor", {
                'proposals': k,
                'acceptance_floor': config.GIBBS_ACCEPTANCE_FLOOR,
                'observed_rate': 1.0 / k,
                'total_mass': sigma.total_mass()})
    logger.debug("Gibbs draw accepted after %d proposals", k)
    return omega, acceptance_estimate(k, seed)


class GibbsProcess(PointProcess):

    def __init__(self, kind, potential, sigma, max_proposals=None):
        super(GibbsProcess, self).__init__(kind, sigma.window)
        if not isinstance(potential, PairPotential):
            potential = PairPotential(potential)
        self.potential = potential
        self.sigma = sigma
        self.max_proposals = max_proposals

    def draw(self, rng):
        omega, k = draw_gibbs(self.potential, self.sigma, rng,
                              self.max_proposals)
        return omega

    def density(self, normalizer=1.0):
        return GibbsDensity(self.potential, normalizer)
