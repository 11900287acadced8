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
Seeded randomness and Monte Carlo bookkeeping.

A :class:`SeedSpec` names one random stream. Streams are split by extending
the spawn key of a :class:`numpy.random.SeedSequence`, so a replicate, or a
part of a replicate, always sees the same numbers no matter how the work is
spread over threads.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import config
from .errors import ValidationError

logger = logging.getLogger(__name__)

MAX_SEED = 2 ** 64


class SeedSpec(object):

    def __init__(self, seed=0, stream_id=0, path=()):
        seed = int(seed)
        stream_id = int(stream_id)
        if not 0 <= seed < MAX_SEED:
            raise ValidationError("seed must be a 64-bit unsigned integer",
                                  "seed")
        if stream_id < 0:
            raise ValidationError("stream_id must be nonnegative",
                                  "stream_id")
        self.seed = seed
        self.stream_id = stream_id
        self.path = tuple(int(p) for p in path)

    def get_spawn_key(self):
        return (self.stream_id,) + self.path

    def rng(self):
        """
        A fresh generator for this stream. Two calls give two generators
        producing the same numbers.

        :rtype: :class:`numpy.random.Generator`
        """
        ss = np.random.SeedSequence(self.seed, spawn_key=self.get_spawn_key())
        return np.random.Generator(np.random.PCG64(ss))

    def substream(self, *keys):
        """
        Derive an independent stream below this one.
        """
        return SeedSpec(self.seed, self.stream_id, self.path + tuple(keys))

    def to_dict(self):
        d = {'seed': self.seed, 'stream_id': self.stream_id}
        if self.path:
            d['path'] = list(self.path)
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d.get('seed', 0), d.get('stream_id', 0), d.get('path', ()))

    def __eq__(self, other):
        return (isinstance(other, SeedSpec)
                and self.seed == other.seed
                and self.get_spawn_key() == other.get_spawn_key())

    def __hash__(self):
        return hash((self.seed, self.get_spawn_key()))

    def __repr__(self):
        return "SeedSpec(%d, %d, %r)" % (self.seed, self.stream_id, self.path)


class Estimate(object):
    """
    Result of a Monte Carlo computation. ``exact`` holds a closed-form
    reference value when one is known for the estimated quantity.
    """

    def __init__(self, mean, std_error, n_samples, seed, exact=None,
                 extra=None):
        if std_error < 0 or math.isnan(std_error):
            raise ValidationError("std_error must be nonnegative",
                                  "std_error")
        if n_samples < 1:
            raise ValidationError("n_samples must be positive", "n_samples")
        self.mean = float(mean)
        self.std_error = float(std_error)
        self.n_samples = int(n_samples)
        self.seed = seed
        self.exact = exact
        self.extra = dict(extra or {})

    @classmethod
    def from_samples(cls, values, seed, exact=None, extra=None):
        values = np.asarray(values, dtype=float)
        n = len(values)
        if n == 0:
            raise ValidationError("no samples to estimate from", "n_samples")
        mean = float(np.mean(values))
        if n > 1 and np.all(np.isfinite(values)):
            se = float(np.std(values, ddof=1) / math.sqrt(n))
        else:
            se = 0.0
        return cls(mean, se, n, seed, exact, extra)

    def within(self, value, sigmas=3.0):
        """
        Whether ``value`` lies within ``sigmas`` standard errors of the mean.
        """
        return abs(self.mean - value) <= sigmas * self.std_error + 1e-12

    def to_dict(self):
        d = {'mean': self.mean,
             'std_error': self.std_error,
             'n_samples': self.n_samples,
             'seed': self.seed.to_dict() if self.seed else None}
        if self.exact is not None:
            d['exact'] = self.exact
        if self.extra:
            d['extra'] = dict(self.extra)
        return d

    def __repr__(self):
        return "Estimate(%r +/- %r, n=%d)" % (self.mean, self.std_error,
                                              self.n_samples)


def fan_out(func, items, threads=None):
    """
    ``[func(item) for item in items]``, computed over a thread pool in
    contiguous blocks. The result order matches ``items``.
    """
    items = list(items)
    n = len(items)
    if threads is None:
        threads = config.THREADS
    threads = max(1, min(int(threads), n)) if n else 1

    def run_block(block):
        return [func(item) for item in block]

    if threads == 1:
        return run_block(items)
    bounds = np.linspace(0, n, threads + 1).astype(int)
    blocks = [items[bounds[k]:bounds[k + 1]] for k in range(threads)]
    results = []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(run_block, blocks):
            results.extend(part)
    return results


def replicate(func, n, seed, threads=None):
    """
    Evaluate ``func(seed.substream(i))`` for ``i`` in ``range(n)``.

    Replicate ``i`` always draws from sub-stream ``i``, so the returned list
    does not depend on ``threads``.

    :param func: callable taking a :class:`SeedSpec`
    :param n: number of replicates
    :param seed: parent stream
    :param threads: worker count, defaults to ``config.THREADS``
    :rtype: list
    """
    logger.debug("replicating %d draws from %r", n, seed)
    return fan_out(lambda i: func(seed.substream(i)), range(n), threads)
