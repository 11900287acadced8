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

import hashlib
import json
import math

import numpy as np


def describe(obj):
    """
    A stable, human readable name for a function or functional: parsed
    expressions give their source text, other callables their qualified
    name.
    """
    if obj is None:
        return None
    expr = getattr(obj, 'expr', None)
    if expr is not None:
        return expr
    if hasattr(obj, 'to_dict'):
        return obj.to_dict()
    if hasattr(obj, 'describe'):
        return obj.describe()
    name = getattr(obj, '__qualname__', None) \
        or getattr(type(obj), '__qualname__', None)
    return name


def describe_measure(sigma):
    return {'density': describe(sigma.density),
            'window': sigma.window.to_list(),
            'total_mass': sigma.total_mass()}


def json_safe(value):
    """
    Recursively convert numpy scalars and arrays to plain Python, and
    non-finite floats to the strings ``"inf"``, ``"-inf"`` and ``"nan"``.
    """
    if isinstance(value, dict):
        return dict((str(k), json_safe(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    if isinstance(value, np.ndarray):
        return [json_safe(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if math.isfinite(value):
            return value
        return 'nan' if math.isnan(value) else ('inf' if value > 0
                                                 else '-inf')
    if hasattr(value, 'to_dict'):
        return json_safe(value.to_dict())
    return value


def canonical_json(value):
    return json.dumps(json_safe(value), sort_keys=True,
                      separators=(',', ':'))


def digest(value):
    """ sha256 of the canonical JSON form of ``value`` """
    return hashlib.sha256(canonical_json(value).encode('utf-8')).hexdigest()
