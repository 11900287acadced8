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

from ..seed import replicate


class PointProcess(object):
    """
    A law on configurations that can be sampled from a :class:`SeedSpec`.

    ``PointProcess('poisson', sigma)``, ``PointProcess('cox', base, mixer)``
    and ``PointProcess('gibbs', potential, sigma)`` return the matching
    subclass.
    """

    def __new__(cls, *args, **kwargs):
        from .poisson import PoissonProcess
        from .cox import CoxProcess
        from .gibbs import GibbsProcess
        subclass = {'poisson': PoissonProcess,
                    'cox': CoxProcess,
                    'gibbs': GibbsProcess}.get(args[0] if args else None, cls)
        return object.__new__(subclass)

    def __init__(self, kind, window):
        self.kind = kind
        self.window = window

    def draw(self, rng):
        raise NotImplementedError

    def sample(self, seed):
        """
        :rtype: :class:`Configuration`
        """
        return self.draw(seed.rng())

    def sample_many(self, n, seed, threads=None):
        """ Replicate ``i`` is drawn from ``seed.substream(i)``. """
        return replicate(self.sample, n, seed, threads)

    def count_mean(self):
        raise NotImplementedError

    def count_variance(self):
        raise NotImplementedError
