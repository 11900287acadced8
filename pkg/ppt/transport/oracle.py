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

import itertools
import logging

import numpy as np
from scipy import stats
from scipy.spatial.distance import cdist

from ..errors import TruncationError, ValidationError
from .emd import emd

logger = logging.getLogger(__name__)

MAX_CELLS = 2
NEGLECTED_MASS = 1e-10


def count_law(masses, truncation):
    """
    The product Poisson law of the cell counts on the box
    ``{0, ..., truncation}^k``, renormalized, and the neglected mass.
    """
    pmfs = [stats.poisson.pmf(np.arange(truncation + 1), m) for m in masses]
    neglected = 1.0 - np.prod([p.sum() for p in pmfs])
    states = np.array(list(itertools.product(range(truncation + 1),
                                             repeat=len(masses))),
                      dtype=float)
    probs = np.ones(len(states))
    for i, p in enumerate(pmfs):
        probs *= p[states[:, i].astype(int)]
    return states, probs / probs.sum(), neglected


def exact_oracle_discrete(cell_masses_mu, cell_masses_nu, truncation):
    """
    The Rubinstein distance for rho1 between two Poisson laws whose intensity
    is constant on each cell of a partition, given by the cell masses. On
    such a partition rho1 between cell-count vectors is their L1 distance.

    The count box is enumerated up to ``truncation`` per cell and the full
    transport LP is solved.

    :raises TruncationError: when the neglected Poisson mass is 1e-10 or
        more
    """
    mu = [float(m) for m in cell_masses_mu]
    nu = [float(m) for m in cell_masses_nu]
    if len(mu) != len(nu) or not 1 <= len(mu) <= MAX_CELLS:
        raise ValidationError("need 1 or %d cells on both sides" % MAX_CELLS,
                              "cell_masses")
    if any(m <= 0 for m in mu + nu):
        raise ValidationError("cell masses must be positive", "cell_masses")
    states_mu, p_mu, lost_mu = count_law(mu, truncation)
    states_nu, p_nu, lost_nu = count_law(nu, truncation)
    lost = max(lost_mu, lost_nu)
    if lost >= NEGLECTED_MASS:
        raise TruncationError("truncation %d neglects Poisson mass %.3g"
                              % (truncation, lost))
    logger.debug("oracle LP over %d x %d count states", len(p_mu), len(p_nu))
    C = cdist(states_mu, states_nu, 'cityblock')
    return float(emd(p_mu, p_nu, C).cost)
