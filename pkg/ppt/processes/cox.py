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

from ..configuration import Configuration
from .poisson import draw_poisson
from .process import PointProcess


def draw_cox(base, mixer, rng, points_rng=None):
    xi = mixer.draw(rng)
    return draw_poisson(base.scaled(xi), points_rng or rng)


def sample_cox(base, mixer, seed):
    """
    Draw ``Xi`` from ``mixer`` on ``seed.substream(0)`` and then the Poisson
    process with intensity ``Xi * base`` on ``seed.substream(1)``.

    :raises MixerError: on a non-positive draw of ``Xi``
    """
    if base.total_mass() == 0:
        return Configuration.empty(base.window)
    return draw_cox(base, mixer, seed.substream(0).rng(),
                    seed.substream(1).rng())


class CoxProcess(PointProcess):

    def __init__(self, kind, base, mixer):
        super(CoxProcess, self).__init__(kind, base.window)
        self.base = base
        self.mixer = mixer

    def draw(self, rng):
        if self.base.total_mass() == 0:
            return Configuration.empty(self.base.window)
        return draw_cox(self.base, self.mixer, rng)

    def sample(self, seed):
        return sample_cox(self.base, self.mixer, seed)

    def count_mean(self):
        return self.mixer.mean() * self.base.total_mass()

    def count_variance(self):
        m = self.base.total_mass()
        return self.mixer.mean() * m + self.mixer.variance() * m * m
