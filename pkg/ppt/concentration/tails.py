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
Deviation bounds for Poisson functionals and their exact references.

All bounds are evaluated in log space and exponentiated at the end.
"""

import csv
import math

import numpy as np
from scipy import special, stats

from ..errors import SharedAtomError, ValidationError
from ..processes.poisson import draw_poisson
from ..seed import Estimate, replicate

TAIL_GRID_COLUMNS = ('mass', 'r', 'exact', 'bound_lipschitz', 'bound_sharp')


class TailQuery(object):
    """
    A deviation level ``r`` for a functional whose gradient size (or the
    mass of its region) is ``mass``.
    """

    def __init__(self, mass, r):
        mass = float(mass)
        r = float(r)
        if not (mass > 0 and math.isfinite(mass)):
            raise ValidationError("mass must be positive and finite", "mass")
        if not (r > 0 and math.isfinite(r)):
            raise ValidationError("r must be positive and finite", "r")
        self.mass = mass
        self.r = r

    def level(self):
        """ [mass + r] """
        return upper_int_part(self.mass + self.r)

    def __repr__(self):
        return "TailQuery(%r, %r)" % (self.mass, self.r)


def upper_int_part(R):
    """
    The smallest positive integer ``N >= R``.
    """
    if not R > 0:
        raise ValidationError("upper integer part needs R > 0, got %r" % R,
                              "R")
    return max(1, int(math.ceil(R)))


def poisson_tail_exact(mass, k):
    """
    P(N >= k) for ``N ~ Poisson(mass)``, as the regularized lower incomplete
    gamma function.
    """
    if not mass > 0:
        raise ValidationError("mass must be positive", "mass")
    if k <= 0:
        return 1.0
    return float(special.gammainc(k, mass))


def centered_count_mgf(lam, mass):
    """
    E exp(lam (N - mass)) for ``N ~ Poisson(mass)`` by summing the series.
    """
    top = int(stats.poisson.isf(1e-18, mass * math.exp(lam))) + 20
    k = np.arange(top + 1)
    logs = stats.poisson.logpmf(k, mass) + lam * (k - mass)
    return float(np.exp(special.logsumexp(logs)))


def laplace_bound_lipschitz(lam, c):
    """ exp(c (e^lam - lam - 1)) """
    if not (lam > 0 and c > 0):
        raise ValidationError("lambda and c must be positive")
    return math.exp(c * (math.expm1(lam) - lam))


def tail_bound_lipschitz(q):
    """ exp(r - (r + c) log(1 + r / c)) with ``c = q.mass`` """
    c, r = q.mass, q.r
    return math.exp(r - (r + c) * math.log1p(r / c))


def tail_bound_count_sharp(q):
    """
    ([m + r] / r) exp([m + r] - m - [m + r] log([m + r] / m))
    / sqrt(2 pi [m + r])
    """
    m, r = q.mass, q.r
    N = q.level()
    log_bound = (math.log(N / r) + N - m - N * math.log(N / m)
                 - 0.5 * math.log(2 * math.pi * N))
    return math.exp(log_bound)


def tail_bound_count_pmf(q):
    """
    ([m + r] / ([m + r] - m)) P(N = [m + r]): the bound before the factorial
    is replaced by its lower Stirling estimate. It lies between the exact
    tail and :func:`tail_bound_count_sharp`.
    """
    m = q.mass
    N = q.level()
    log_bound = (math.log(N / (N - m)) - m + N * math.log(m)
                 - special.gammaln(N + 1))
    return math.exp(log_bound)


def tail_bound_rho_eta(total_mass, r):
    """
    Deviation bound for ``rho1(., eta)`` above its mean under the Poisson law
    of a measure of total mass ``total_mass``.
    """
    q = TailQuery(total_mass, r)
    m = q.mass
    M = upper_int_part(m)
    N = q.level()
    log_a = (0.5 * math.log(2 * math.pi * M) + M * math.log(M)
             + 1.0 / (12 * M) - m * math.log(m))
    log_b = (N - M - N * math.log(N / (N - r))
             - 0.5 * math.log(2 * math.pi * N))
    return math.exp(log_a + log_b)


def tail_bound_rho_eta_factorial(total_mass, r):
    """
    ([m + r] - r)^r [m]! / [m + r]!, the iterated bound before Stirling's
    estimates are applied.
    """
    q = TailQuery(total_mass, r)
    M = upper_int_part(q.mass)
    N = q.level()
    return math.exp(r * math.log(N - r) + special.gammaln(M + 1)
                    - special.gammaln(N + 1))


def check_disjoint(samples, eta):
    shared = eta.get_atom_counter()
    for omega in samples:
        if any(a in shared for a in omega.get_atom_counter()):
            raise SharedAtomError("a sampled configuration shares an atom "
                                  "with eta")


def rho_eta_tail_exact(sigma, eta, r, n_check, seed):
    """
    ``P(rho1(omega, eta) >= E rho1(., eta) + r)`` under the Poisson law of
    ``sigma``. For diffuse ``sigma`` the sample never shares an atom with
    ``eta``, so ``rho1(omega, eta) = omega(Lambda) + eta(Lambda)`` and the
    tail is a Poisson count tail. ``n_check`` samples confirm the
    disjointness first.

    :raises SharedAtomError: when a sample meets an atom of ``eta``
    """
    samples = replicate(lambda s: draw_poisson(sigma, s.rng()), n_check, seed)
    check_disjoint(samples, eta)
    m = sigma.total_mass()
    return poisson_tail_exact(m, upper_int_part(m + r))


def rho_eta_tail_mc(sigma, eta, r, n_samples, seed):
    """
    Monte Carlo of the same tail, with the exact value attached.
    """
    from ..metrics import rho1
    m = sigma.total_mass()
    mean = m + eta.count()
    samples = replicate(lambda s: draw_poisson(sigma, s.rng()), n_samples,
                        seed)
    check_disjoint(samples, eta)
    hits = [1.0 if rho1(w, eta) >= mean + r else 0.0 for w in samples]
    return Estimate.from_samples(
        hits, seed, poisson_tail_exact(m, upper_int_part(m + r)))


def tail_grid(masses, rs):
    """
    Rows ``{mass, r, exact, bound_lipschitz, bound_sharp}``. ``exact`` is the
    count tail ``P(N >= mass + r)``; the Lipschitz bound uses ``c = mass``,
    as for centered counts.
    """
    rows = []
    for m in masses:
        for r in rs:
            q = TailQuery(m, r)
            rows.append({'mass': q.mass, 'r': q.r,
                         'exact': poisson_tail_exact(q.mass, q.level()),
                         'bound_lipschitz': tail_bound_lipschitz(q),
                         'bound_sharp': tail_bound_count_sharp(q)})
    return rows


def write_tail_grid_csv(path, rows):
    with open(path, 'w', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=TAIL_GRID_COLUMNS,
                                quoting=csv.QUOTE_MINIMAL,
                                lineterminator='\r\n')
        writer.writeheader()
        for row in rows:
            writer.writerow(dict((k, repr(float(row[k])))
                                 for k in TAIL_GRID_COLUMNS))
