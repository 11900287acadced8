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
Laws of the random scale ``Xi`` of a Cox process with intensity
``Xi * sigma``.
"""

import math

import numpy as np
from scipy import stats

from ..errors import MixerError, ValidationError


class Mixer(object):
    """
    ``Mixer('gamma', shape=2.0, scale=0.5)`` and friends return the
    matching family. Every family knows its mean, variance and
    ``E|Xi - c|`` in closed form.
    """

    def __new__(cls, *args, **kwargs):
        subclass = {'constant': ConstantMixer,
                    'gamma': GammaMixer,
                    'lognormal': LognormalMixer,
                    'two_point': TwoPointMixer}.get(args[0] if args else None)
        if subclass is None:
            raise ValidationError("unknown mixer family %r" %
                                  (args[0] if args else None,), "mixer.family")
        return object.__new__(subclass)

    def __init__(self, family, **params):
        self.family = family
        self.params = dict((k, float(v)) for k, v in params.items())

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        family = d.pop('family', None)
        try:
            return cls(family, **d)
        except TypeError as e:
            raise ValidationError(str(e), "mixer")

    def to_dict(self):
        d = {'family': self.family}
        d.update(self.params)
        return d

    def draw(self, rng):
        xi = float(self._draw(rng))
        if not xi > 0:
            raise MixerError("%s mixer drew the non-positive scale %r"
                             % (self.family, xi))
        return xi

    def mean(self):
        raise NotImplementedError

    def variance(self):
        raise NotImplementedError

    def mean_abs_deviation(self, c=1.0):
        """ E|Xi - c| """
        raise NotImplementedError

    def __repr__(self):
        return "Mixer(%r, %r)" % (self.family, self.params)


class ConstantMixer(Mixer):

    def __init__(self, family, value=1.0):
        super(ConstantMixer, self).__init__(family, value=value)
        self.value = float(value)

    def _draw(self, rng):
        return self.value

    def mean(self):
        return self.value

    def variance(self):
        return 0.0

    def mean_abs_deviation(self, c=1.0):
        return abs(self.value - c)


class GammaMixer(Mixer):

    def __init__(self, family, shape=1.0, scale=1.0):
        if not (shape > 0 and scale > 0):
            raise ValidationError("gamma mixer needs positive shape and "
                                  "scale", "mixer")
        super(GammaMixer, self).__init__(family, shape=shape, scale=scale)
        self.shape = float(shape)
        self.scale = float(scale)

    def _draw(self, rng):
        return rng.gamma(self.shape, self.scale)

    def mean(self):
        return self.shape * self.scale

    def variance(self):
        return self.shape * self.scale ** 2

    def mean_abs_deviation(self, c=1.0):
        k, theta = self.shape, self.scale
        below = (c * stats.gamma.cdf(c, k, scale=theta)
                 - k * theta * stats.gamma.cdf(c, k + 1, scale=theta))
        return float(self.mean() - c + 2 * below)


class LognormalMixer(Mixer):

    def __init__(self, family, mu=0.0, sigma=1.0):
        if not sigma > 0:
            raise ValidationError("lognormal mixer needs sigma > 0", "mixer")
        super(LognormalMixer, self).__init__(family, mu=mu, sigma=sigma)
        self.mu = float(mu)
        self.sigma = float(sigma)

    def _draw(self, rng):
        return rng.lognormal(self.mu, self.sigma)

    def mean(self):
        return math.exp(self.mu + self.sigma ** 2 / 2)

    def variance(self):
        s2 = self.sigma ** 2
        return math.expm1(s2) * math.exp(2 * self.mu + s2)

    def mean_abs_deviation(self, c=1.0):
        mu, s = self.mu, self.sigma
        z = (math.log(c) - mu) / s
        below = c * stats.norm.cdf(z) - self.mean() * stats.norm.cdf(z - s)
        return float(self.mean() - c + 2 * below)


class TwoPointMixer(Mixer):

    def __init__(self, family, low=0.5, high=1.5, p_low=0.5):
        if not 0 <= p_low <= 1:
            raise ValidationError("p_low must be a probability", "mixer")
        super(TwoPointMixer, self).__init__(family, low=low, high=high,
                                            p_low=p_low)
        self.low = float(low)
        self.high = float(high)
        self.p_low = float(p_low)

    def _draw(self, rng):
        return self.low if rng.random() < self.p_low else self.high

    def mean(self):
        return self.p_low * self.low + (1 - self.p_low) * self.high

    def variance(self):
        return self.p_low * (1 - self.p_low) * (self.high - self.low) ** 2

    def mean_abs_deviation(self, c=1.0):
        return (self.p_low * abs(self.low - c)
                + (1 - self.p_low) * abs(self.high - c))
