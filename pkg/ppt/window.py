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

import numpy as np

from .errors import ValidationError


class Window(object):
    """
    An axis-aligned box ``[lower, upper]`` in R^d. Boxes are closed; points
    on the boundary belong to the window.
    """

    def __init__(self, lower, upper):
        lower = np.atleast_1d(np.asarray(lower, dtype=float)).copy()
        upper = np.atleast_1d(np.asarray(upper, dtype=float)).copy()
        if lower.ndim != 1 or lower.shape != upper.shape or len(lower) == 0:
            raise ValidationError("window bounds must be vectors of equal "
                                  "length", "window")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ValidationError("window bounds must be finite", "window")
        if not np.all(lower < upper):
            raise ValidationError("window needs lower < upper in every "
                                  "coordinate", "window")
        lower.flags.writeable = False
        upper.flags.writeable = False
        self.lower = lower
        self.upper = upper

    @classmethod
    def parse(cls, data, path="window"):
        """
        Accepts ``[a, b]`` for an interval or ``[[a1, b1], [a2, b2], ...]``
        for a box.
        """
        try:
            arr = np.asarray(data, dtype=float)
        except (TypeError, ValueError):
            raise ValidationError("window must be numeric", path)
        if arr.shape == (2,):
            return cls([arr[0]], [arr[1]])
        if arr.ndim == 2 and arr.shape[1] == 2:
            return cls(arr[:, 0], arr[:, 1])
        raise ValidationError("window must be [a, b] or a list of [a, b] "
                              "pairs", path)

    @classmethod
    def unit(cls, d=1):
        return cls(np.zeros(d), np.ones(d))

    @property
    def dim(self):
        return len(self.lower)

    def get_widths(self):
        return self.upper - self.lower

    def volume(self):
        return float(np.prod(self.upper - self.lower))

    def contains(self, points):
        """
        Boolean mask over the rows of ``points`` (shape ``(n, d)``), or a
        single bool for one point.
        """
        pts = np.asarray(points, dtype=float)
        single = pts.ndim == 1
        pts = np.atleast_2d(pts)
        if pts.shape[1] != self.dim:
            raise ValidationError("point dimension %d does not match window "
                                  "dimension %d" % (pts.shape[1], self.dim))
        mask = np.all((pts >= self.lower) & (pts <= self.upper), axis=1)
        return bool(mask[0]) if single else mask

    def intersect(self, other):
        """
        The box common to both windows, or None when they do not overlap
        in a set of positive volume.
        """
        if other.dim != self.dim:
            raise ValidationError("cannot intersect windows of different "
                                  "dimension")
        lo = np.maximum(self.lower, other.lower)
        hi = np.minimum(self.upper, other.upper)
        if np.any(lo >= hi):
            return None
        return Window(lo, hi)

    def sample_uniform(self, k, rng):
        return self.lower + rng.random((k, self.dim)) * (self.upper - self.lower)

    def to_list(self):
        if self.dim == 1:
            return [float(self.lower[0]), float(self.upper[0])]
        return [[float(a), float(b)] for a, b in zip(self.lower, self.upper)]

    def __eq__(self, other):
        return (isinstance(other, Window)
                and np.array_equal(self.lower, other.lower)
                and np.array_equal(self.upper, other.upper))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((tuple(self.lower), tuple(self.upper)))

    def __repr__(self):
        return "Window(%r)" % (self.to_list(),)
