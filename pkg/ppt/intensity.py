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
Diffuse intensity measures given by a density against Lebesgue measure on a
window.
"""

import logging
import math

import numpy as np

from . import quadrature
from .errors import (EnvelopeViolationError, ValidationError, ZeroMassError)
from .expressions import check_nonnegative, parse_density_expr

logger = logging.getLogger(__name__)

MAX_BATCH = 1000000


def pointwise(f):
    """
    Turn a function of one point into a function of an ``(n, d)`` array.
    """
    def vectorized(pts):
        pts = np.atleast_2d(pts)
        return np.array([f(p) for p in pts], dtype=float)
    return vectorized


class IntensityMeasure(object):
    """
    ``sigma(dx) = density(x) dx`` on ``window``.

    :param density: vectorized function ``(n, d) -> (n,)``; pass
        ``vectorized=False`` for a function of a single point
    :param density_sup: envelope used by rejection sampling; parsed
        expressions supply their own when it is omitted
    :param profile: the density as a function of ``x_0`` alone, when it is
        one; parsed expressions supply it
    """

    def __init__(self, density, window, density_sup=None, vectorized=True,
                 total_mass=None, breakpoints=None, profile=None):
        if not vectorized:
            density = pointwise(density)
        if density_sup is None:
            if not hasattr(density, 'sup_on'):
                raise ValidationError("density_sup is required for plain "
                                      "functions", "density_sup")
            density_sup = density.sup_on(window)
            if density_sup <= 0:
                density_sup = 1.0
        density_sup = float(density_sup)
        if not density_sup > 0 or not math.isfinite(density_sup):
            raise ValidationError("density_sup must be positive and finite",
                                  "density_sup")
        if breakpoints is None and hasattr(density, 'breakpoints'):
            breakpoints = density.breakpoints()
        if profile is None and hasattr(density, 'profile'):
            profile = density.profile()
        self.density = density
        self.window = window
        self.density_sup = density_sup
        self.breakpoints = tuple(breakpoints or ())
        self.profile = profile
        if total_mass is None:
            total_mass = quadrature.integrate(self.density, window,
                                              breakpoints=self.breakpoints)
        if total_mass < 0:
            raise ValidationError("density integrates to a negative mass",
                                  "density")
        self._total_mass = float(total_mass)

    @classmethod
    def constant(cls, c, window):
        """ ``c`` times Lebesgue measure on ``window``. """
        c = float(c)
        if c < 0:
            raise ValidationError("intensity must be nonnegative", "density")
        return cls(lambda pts: np.full(len(np.atleast_2d(pts)), c), window,
                   density_sup=c if c > 0 else 1.0,
                   total_mass=c * window.volume(),
                   profile=lambda t: np.full(np.shape(t), c))

    @classmethod
    def parse(cls, expr, window, density_sup=None):
        density = parse_density_expr(expr)
        check_nonnegative(density, window)
        return cls(density, window, density_sup)

    @property
    def dim(self):
        return self.window.dim

    def total_mass(self):
        """ sigma(Lambda) """
        return self._total_mass

    def mass_in(self, region):
        """ sigma(region) """
        sub = self.window.intersect(region)
        if sub is None:
            return 0.0
        return quadrature.integrate(self.density, sub,
                                    breakpoints=self.breakpoints)

    def integrate(self, g, rtol=None, atol=None, breakpoints=()):
        """
        The integral of the vectorized ``g`` against this measure.
        """
        return quadrature.integrate(
            lambda pts: g(pts) * self.density(pts), self.window, rtol, atol,
            breakpoints=tuple(self.breakpoints) + tuple(breakpoints))

    def evaluate(self, pts):
        return np.asarray(self.density(np.atleast_2d(pts)), dtype=float)

    def scaled(self, c):
        """ The measure ``c * sigma``. """
        c = float(c)
        if c < 0:
            raise ValidationError("scale must be nonnegative", "scale")
        f = self.density
        h = self.profile
        return IntensityMeasure(lambda pts: c * f(pts), self.window,
                                density_sup=c * self.density_sup if c > 0
                                else self.density_sup,
                                total_mass=c * self._total_mass,
                                breakpoints=self.breakpoints,
                                profile=None if h is None
                                else lambda t: c * h(t))

    def reweighted(self, g, g_sup, breakpoints=()):
        """
        The measure ``g * sigma`` for a vectorized weight ``g`` bounded by
        ``g_sup``.
        """
        f = self.density
        sup = float(g_sup) * self.density_sup
        return IntensityMeasure(lambda pts: g(pts) * f(pts), self.window,
                                density_sup=sup if sup > 0 else 1.0,
                                breakpoints=tuple(self.breakpoints)
                                + tuple(breakpoints))

    def sample_points(self, k, rng):
        """
        ``k`` i.i.d. points from ``sigma / sigma(Lambda)``, by rejection
        against the constant envelope ``density_sup``.

        :raises EnvelopeViolationError: when a proposal shows a density
            value above ``density_sup``
        """
        d = self.dim
        if k == 0:
            return np.empty((0, d))
        if self._total_mass <= 0:
            raise ZeroMassError("cannot sample from a measure of zero mass")
        rate = min(1.0, self._total_mass
                   / (self.density_sup * self.window.volume()))
        accepted = []
        have = 0
        while have < k:
            need = k - have
            batch = min(MAX_BATCH, int(need / max(rate, 1e-3) * 1.2) + 16)
            pts = self.window.sample_uniform(batch, rng)
            u = rng.random(batch)
            vals = self.evaluate(pts)
            top = vals.max()
            if top > self.density_sup:
                raise EnvelopeViolationError(float(top), self.density_sup)
            if vals.min() < 0:
                raise ValidationError("density took the negative value %r"
                                      % float(vals.min()), "density")
            keep = pts[u * self.density_sup < vals]
            accepted.append(keep[:need])
            have += min(len(keep), need)
        return np.vstack(accepted)

    def __repr__(self):
        return "IntensityMeasure(%r, %r, mass=%r)" % (
            getattr(self.density, 'expr', self.density), self.window,
            self._total_mass)
