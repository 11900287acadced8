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
Finite configurations of points in a window.

A configuration is the atomic measure sum of unit masses at its atoms. Atoms
are stored as a read-only ``(n, d)`` array; storage order carries no meaning
and equality is multiset equality under exact coordinate comparison.

Marked configurations on ``[0, T] x Lambda`` are plain configurations of
dimension ``d + 1`` whose coordinate 0 is the time mark.
"""

import json
from collections import Counter

import numpy as np

from .errors import OutsideWindowError, ValidationError
from .window import Window


class Configuration(object):

    def __init__(self, atoms, window):
        atoms = np.asarray(atoms, dtype=float)
        if atoms.size == 0:
            atoms = np.empty((0, window.dim))
        elif atoms.ndim == 1:
            if window.dim == 1:
                atoms = atoms.reshape(-1, 1)
            else:
                atoms = atoms.reshape(1, -1)
        if atoms.ndim != 2 or atoms.shape[1] != window.dim:
            raise ValidationError("atoms must have shape (n, %d)" % window.dim,
                                  "atoms")
        if not np.all(np.isfinite(atoms)):
            raise ValidationError("atom coordinates must be finite", "atoms")
        inside = window.contains(atoms)
        if not np.all(inside):
            bad = atoms[~inside][0]
            raise OutsideWindowError("atom %r lies outside %r"
                                     % (bad.tolist(), window), "atoms")
        atoms = atoms.copy()
        atoms.flags.writeable = False
        self.atoms = atoms
        self.window = window

    @classmethod
    def empty(cls, window):
        return cls(np.empty((0, window.dim)), window)

    @property
    def dim(self):
        return self.window.dim

    def count(self):
        """ omega(Lambda) """
        return self.atoms.shape[0]

    def __len__(self):
        return self.count()

    def is_empty(self):
        return self.count() == 0

    def count_in(self, region):
        return int(np.count_nonzero(region.contains(self.atoms))) \
            if self.count() else 0

    def add(self, x):
        """
        omega + epsilon_x

        :rtype: :class:`Configuration`
        """
        x = np.atleast_1d(np.asarray(x, dtype=float)).reshape(1, -1)
        return Configuration(np.vstack([self.atoms, x]), self.window)

    def superpose(self, other):
        check_same_window(self, other)
        return Configuration(np.vstack([self.atoms, other.atoms]), self.window)

    def restrict(self, region):
        """
        The restriction to ``region``, living on the window
        ``self.window & region``.
        """
        sub = self.window.intersect(region)
        if sub is None:
            raise ValidationError("restriction region misses the window",
                                  "region")
        if not self.count():
            return Configuration.empty(sub)
        return Configuration(self.atoms[sub.contains(self.atoms)], sub)

    def get_atom_counter(self):
        return Counter(tuple(a) for a in self.atoms.tolist())

    def sorted_atoms(self):
        if not self.count():
            return self.atoms
        order = np.lexsort(self.atoms.T[::-1])
        return self.atoms[order]

    def times(self):
        """ Time marks of a marked configuration. """
        return self.atoms[:, 0]

    def to_list(self, hex_floats=False):
        if hex_floats:
            return [[float(c).hex() for c in a] for a in self.atoms.tolist()]
        return self.atoms.tolist()

    def to_json(self, hex_floats=False):
        return json.dumps(self.to_list(hex_floats))

    @classmethod
    def from_list(cls, data, window):
        """
        Reads a list of coordinate lists. Coordinates may be numbers or
        ``float.hex`` strings.
        """
        atoms = []
        for i, a in enumerate(data):
            if not isinstance(a, (list, tuple)):
                a = [a]
            try:
                atoms.append([float.fromhex(c) if isinstance(c, str)
                              else float(c) for c in a])
            except (TypeError, ValueError):
                raise ValidationError("bad coordinate in atom %d" % i,
                                      "atoms[%d]" % i)
        return cls(np.array(atoms, dtype=float).reshape(-1, window.dim),
                   window)

    @classmethod
    def from_json(cls, text, window):
        return cls.from_list(json.loads(text), window)

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return False
        return (self.count() == other.count()
                and self.dim == other.dim
                and np.array_equal(self.sorted_atoms(), other.sorted_atoms()))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.sorted_atoms().tobytes())

    def __repr__(self):
        return "Configuration(%r, %r)" % (self.atoms.tolist(), self.window)


def check_same_window(omega, eta):
    if omega.dim != eta.dim:
        raise ValidationError("configurations have different dimensions")


def sym_diff_count(omega, eta):
    """
    Number of atoms of ``omega`` not matched by atoms of ``eta``, counted
    with multiplicity: ``(omega - omega & eta)(Lambda)``.
    """
    check_same_window(omega, eta)
    left = omega.get_atom_counter()
    left.subtract(eta.get_atom_counter())
    return sum(c for c in left.values() if c > 0)


def marked(times, points, window, horizon):
    """
    Build a marked configuration on ``[0, horizon] x window`` from time marks
    and positions. ``points`` may be None for unmarked time atoms.
    """
    times = np.asarray(times, dtype=float).reshape(-1, 1)
    if points is None or window is None:
        return Configuration(times, Window([0.0], [horizon]))
    points = np.asarray(points, dtype=float).reshape(len(times), -1)
    box = Window(np.concatenate([[0.0], window.lower]),
                 np.concatenate([[horizon], window.upper]))
    return Configuration(np.hstack([times, points]), box)
