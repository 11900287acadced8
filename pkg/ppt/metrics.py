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
Distances between single configurations.

``rho0`` is the trivial distance, ``rho1`` the total variation (number of
unmatched atoms) and ``rho2`` the Wasserstein distance, infinite between
configurations with different numbers of atoms. Infinite values are the
float ``inf``.
"""

import math

import numpy as np
from scipy.spatial.distance import cdist

from .configuration import Configuration, check_same_window, sym_diff_count
from .errors import UndefinedInputError, ValidationError
from .transport.assignment import assignment_solve

INF = float('inf')


def rho0(omega, eta):
    check_same_window(omega, eta)
    return 0 if omega == eta else 1


def rho1(omega, eta):
    """
    ``(omega - eta)(Lambda) + (eta - omega)(Lambda)``, atoms counted with
    multiplicity.
    """
    return sym_diff_count(omega, eta) + sym_diff_count(eta, omega)


def rho2(omega, eta):
    """
    Square root of the minimal sum of squared Euclidean gaps over bijections
    between the atoms, or ``inf`` when the counts differ.
    """
    check_same_window(omega, eta)
    n = omega.count()
    if n != eta.count():
        return INF
    if n == 0:
        return 0.0
    perm, cost = assignment_solve(cdist(omega.atoms, eta.atoms,
                                        'sqeuclidean'))
    return math.sqrt(cost)


def rho1_normalized(omega, eta):
    """
    Total variation between ``omega / omega(Lambda)`` and
    ``eta / eta(Lambda)``.
    """
    check_same_window(omega, eta)
    n, m = omega.count(), eta.count()
    if n == 0 or m == 0:
        raise UndefinedInputError("normalized total variation needs two "
                                  "nonempty configurations")
    left = omega.get_atom_counter()
    right = eta.get_atom_counter()
    return float(sum(abs(left.get(x, 0) / float(n) - right.get(x, 0) / float(m))
                     for x in set(left) | set(right)))


def rho2_normalized(omega, eta):
    n, m = omega.count(), eta.count()
    if n == m and n > 0:
        return rho2(omega, eta) / n
    check_same_window(omega, eta)
    return float(abs(n - m))


def rho2_marked(omega, eta):
    """
    Wasserstein distance between marked configurations, with ground cost
    ``|x - y|^2 + |t - s|^2``. Coordinate 0 of both configurations is the
    time mark, so this is ``rho2`` in dimension ``d + 1``.
    """
    if omega.dim < 1 or eta.dim != omega.dim:
        raise ValidationError("marked configurations need a common "
                              "dimension")
    return rho2(omega, eta)


def restrict(omega, region):
    """ The restriction map pi_K. """
    return omega.restrict(region)


def quantize(omega, cells):
    """
    Move every atom to the centre of its cell in a regular grid over the
    window. ``cells`` is a cell count per axis (an int or one per axis).

    rho1 does not increase under quantization.
    """
    window = omega.window
    cells = np.broadcast_to(np.asarray(cells, dtype=int), (window.dim,))
    if np.any(cells < 1):
        raise ValidationError("cells must be positive", "cells")
    if omega.is_empty():
        return omega
    widths = window.get_widths() / cells
    idx = np.floor((omega.atoms - window.lower) / widths).astype(int)
    idx = np.clip(idx, 0, cells - 1)
    centres = window.lower + (idx + 0.5) * widths
    return Configuration(centres, window)


METRICS = {'rho0': rho0,
           'rho1': rho1,
           'rho2': rho2,
           'rho1_normalized': rho1_normalized,
           'rho2_normalized': rho2_normalized,
           'rho2_marked': rho2_marked}


def rho_by_name(name):
    try:
        return METRICS[name]
    except KeyError:
        raise ValidationError("unknown metric %r; expected one of %s"
                              % (name, ", ".join(sorted(METRICS))), "metric")
