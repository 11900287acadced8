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
Deterministic time changes of the half-line.

A time change is given by ``U`` with ``U(0) = 0`` and ``U' > -1``; it moves
time ``t`` to ``v(t) = t + U(t)``. Standard Poisson atoms pulled back
through ``v`` form the Poisson process with intensity ``(1 + U'(t)) dt``.
"""

import math

import numpy as np

from .. import config
from ..errors import InvalidTimeChangeError, ValidationError


class TimeChangeSpec(object):
    """
    :param U: vectorized function of time (1-d array in, 1-d array out)
    :param U_prime: its derivative
    :param horizon: the finite horizon ``T``
    """

    def __init__(self, U, U_prime, horizon, name=None, l2_squared=None):
        if not (horizon > 0 and math.isfinite(horizon)):
            raise ValidationError("horizon must be positive and finite",
                                  "horizon")
        self.U = U
        self.U_prime = U_prime
        self.horizon = float(horizon)
        self.name = name
        # closed form of the integral of U^2 over the half-line, when known
        self.l2_squared = l2_squared
        self.validate()

    def validate(self):
        grid = np.linspace(0.0, self.horizon, config.TIME_CHANGE_GRID)
        u = np.asarray(self.U(grid), dtype=float)
        du = np.asarray(self.U_prime(grid), dtype=float)
        if not (np.all(np.isfinite(u)) and np.all(np.isfinite(du))):
            raise InvalidTimeChangeError("U or U' is not finite on [0, T]",
                                         "time_change")
        if abs(u[0]) > 1e-12:
            raise InvalidTimeChangeError("U(0) = %r, expected 0" % u[0],
                                         "time_change")
        if np.min(du) <= -1:
            raise InvalidTimeChangeError(
                "U' reaches %r <= -1 on [0, T]" % float(np.min(du)),
                "time_change")
        if np.any(np.diff(grid + u) <= 0):
            raise InvalidTimeChangeError("v(t) = t + U(t) is not strictly "
                                         "increasing", "time_change")

    def v(self, t):
        t = np.asarray(t, dtype=float)
        return t + self.U(t)

    def v_inverse(self, r):
        """
        ``v^{-1}(r)`` for ``r`` in ``[0, v(T)]`` by vectorized bisection to
        ``config.BISECTION_TOL``.
        """
        r = np.atleast_1d(np.asarray(r, dtype=float))
        lo = np.zeros_like(r)
        hi = np.full_like(r, self.horizon)
        while np.max(hi - lo, initial=0.0) > config.BISECTION_TOL:
            mid = 0.5 * (lo + hi)
            below = self.v(mid) < r
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        return 0.5 * (lo + hi)

    def end(self):
        """ v(T) """
        return float(self.v(np.array([self.horizon]))[0])

    def scaled(self, c):
        """ The time change ``c * U``. """
        U, dU = self.U, self.U_prime
        l2 = None if self.l2_squared is None else c * c * self.l2_squared
        return TimeChangeSpec(lambda t: c * U(t), lambda t: c * dU(t),
                              self.horizon, "%r*%s" % (c, self.name), l2)

    @classmethod
    def zero(cls, horizon=1.0):
        return cls(np.zeros_like, np.zeros_like, horizon, 'zero', 0.0)

    @classmethod
    def cubic_rational(cls, horizon=200.0):
        """
        ``U(t) = t / (1 + t^3)``, whose squared norm on the half-line is
        1/3. Its derivative takes values in ``[-1/3, 1]``.
        """
        def U(t):
            t = np.asarray(t, dtype=float)
            return t / (1.0 + t ** 3)

        def dU(t):
            t = np.asarray(t, dtype=float)
            return (1.0 - 2.0 * t ** 3) / (1.0 + t ** 3) ** 2

        return cls(U, dU, horizon, 'cubic_rational', 1.0 / 3.0)

    @classmethod
    def exponential(cls, a, b, horizon=None):
        """
        ``U(t) = a t e^{-b t}`` with squared norm ``a^2 / (4 b^3)``. Valid
        for ``-1 < a < e^2``.
        """
        if not b > 0:
            raise InvalidTimeChangeError("b must be positive", "time_change")
        if horizon is None:
            horizon = 40.0 / b

        def U(t):
            t = np.asarray(t, dtype=float)
            return a * t * np.exp(-b * t)

        def dU(t):
            t = np.asarray(t, dtype=float)
            return a * np.exp(-b * t) * (1.0 - b * t)

        return cls(U, dU, horizon, 'exponential(%r,%r)' % (a, b),
                   a * a / (4.0 * b ** 3))

    @classmethod
    def from_dict(cls, d, path="time_change"):
        d = dict(d)
        family = d.pop('family', 'cubic_rational')
        scale = float(d.pop('scale', 1.0))
        try:
            if family == 'cubic_rational':
                tc = cls.cubic_rational(**d)
            elif family == 'exponential':
                tc = cls.exponential(**d)
            elif family == 'zero':
                tc = cls.zero(**d)
            else:
                raise ValidationError("unknown time change family %r"
                                      % family, path + ".family")
        except TypeError as e:
            raise ValidationError(str(e), path)
        return tc if scale == 1.0 else tc.scaled(scale)

    def __repr__(self):
        return "TimeChangeSpec(%s, T=%r)" % (self.name, self.horizon)
