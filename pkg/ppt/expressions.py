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
The small function grammar reachable from experiment files::

    const:c               c
    poly:c0,c1,...        c0 + c1 t + c2 t^2 + ...
    exp:a,b               a e^(b t)
    step:s,lo,hi          lo for t < s, hi for t >= s
    gauss:a,b             a e^(-b t^2)

Densities evaluate the grammar at the first coordinate ``t = x_0``; pair
potentials evaluate it at the distance ``t = |z|``.
"""

import math

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import ExpressionParseError, ValidationError

ARITY = {'const': (1, 1),
         'poly': (1, None),
         'exp': (2, 2),
         'step': (3, 3),
         'gauss': (2, 2)}


class Expression(object):
    """
    A parsed function of one real variable ``t``. Instantiating the base
    class with a kind name returns the matching subclass, e.g.
    ``Expression('poly', [0, 1], 'poly:0,1')``.
    """

    def __new__(cls, *args, **kwargs):
        subclass = {'const': ConstExpression,
                    'poly': PolyExpression,
                    'exp': ExpExpression,
                    'step': StepExpression,
                    'gauss': GaussExpression}.get(args[0], cls)
        return object.__new__(subclass)

    def __init__(self, kind, params, expr=None):
        self.kind = kind
        self.params = [float(p) for p in params]
        self.expr = expr if expr is not None else format_expr(kind, params)

    def of(self, t):
        raise NotImplementedError

    def extrema(self, a, b):
        """ Candidate points in [a, b] where the extremes are reached. """
        return [a, b]

    def sup_between(self, a, b):
        return float(np.max(self.of(np.asarray(self.extrema(a, b)))))

    def inf_between(self, a, b):
        return float(np.min(self.of(np.asarray(self.extrema(a, b)))))

    def breakpoints(self):
        return ()

    def __repr__(self):
        return "%s(%r)" % (self.__class__.__name__, self.expr)


class ConstExpression(Expression):
    def of(self, t):
        return np.full(np.shape(t), self.params[0])


class PolyExpression(Expression):
    def of(self, t):
        return P.polyval(t, self.params)

    def extrema(self, a, b):
        pts = [a, b]
        if len(self.params) > 2:
            for r in P.polyroots(P.polyder(self.params)):
                if abs(r.imag) < 1e-12 and a < r.real < b:
                    pts.append(r.real)
        return pts


class ExpExpression(Expression):
    def of(self, t):
        a, b = self.params
        return a * np.exp(b * np.asarray(t, dtype=float))


class StepExpression(Expression):
    def of(self, t):
        s, lo, hi = self.params
        return np.where(np.asarray(t) < s, lo, hi).astype(float)

    def extrema(self, a, b):
        s = self.params[0]
        pts = [a, b]
        if a < s < b:
            pts.append(s)
            pts.append(np.nextafter(s, a))
        return pts

    def breakpoints(self):
        return (self.params[0],)


class GaussExpression(Expression):
    def of(self, t):
        a, b = self.params
        t = np.asarray(t, dtype=float)
        return a * np.exp(-b * t * t)

    def extrema(self, a, b):
        pts = [a, b]
        if a < 0 < b:
            pts.append(0.0)
        return pts


class DensityExpression(object):
    """
    A parsed density ``x -> g(x_0)``, callable on ``(n, d)`` arrays.
    """

    def __init__(self, g):
        self.g = g
        self.expr = g.expr

    def __call__(self, pts):
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        return self.g.of(pts[:, 0])

    def sup_on(self, window):
        return self.g.sup_between(float(window.lower[0]),
                                  float(window.upper[0]))

    def inf_on(self, window):
        return self.g.inf_between(float(window.lower[0]),
                                  float(window.upper[0]))

    def breakpoints(self):
        return self.g.breakpoints()

    def profile(self):
        """ The density as a function of ``x_0`` alone. """
        return self.g.of

    def __repr__(self):
        return "DensityExpression(%r)" % self.expr


class RadialExpression(object):
    """
    A parsed pair potential ``z -> g(|z|)``, callable on ``(n, d)`` arrays
    of differences.
    """

    def __init__(self, g):
        self.g = g
        self.expr = g.expr

    def __call__(self, diffs):
        diffs = np.atleast_2d(np.asarray(diffs, dtype=float))
        return self.g.of(np.sqrt(np.einsum('ij,ij->i', diffs, diffs)))

    def inf_on(self, window):
        return self.g.inf_between(0.0, float(np.linalg.norm(
            window.upper - window.lower)))

    def breakpoints(self):
        """ Distances where the potential jumps. """
        return self.g.breakpoints()

    def __repr__(self):
        return "RadialExpression(%r)" % self.expr


def format_expr(kind, params):
    return "%s:%s" % (kind, ",".join(repr(float(p)) for p in params))


def parse_expr(expr):
    """
    Parse ``expr`` into an :class:`Expression`.

    :raises ExpressionParseError: with the offending position
    """
    if not isinstance(expr, str):
        raise ExpressionParseError("expression must be a string", str(expr), 0)
    kind, colon, rest = expr.partition(':')
    name = kind.strip()
    if not colon:
        raise ExpressionParseError("expected ':' after function name",
                                   expr, len(expr))
    if name not in ARITY:
        raise ExpressionParseError("unknown function %r" % name, expr,
                                   len(kind) - len(kind.lstrip()))
    params = []
    pos = len(kind) + 1
    for field in rest.split(','):
        text = field.strip()
        start = pos + len(field) - len(field.lstrip())
        try:
            value = float(text)
        except ValueError:
            raise ExpressionParseError("expected a number", expr, start)
        if not math.isfinite(value):
            raise ExpressionParseError("numbers must be finite", expr, start)
        params.append(value)
        pos += len(field) + 1
    lo, hi = ARITY[name]
    if len(params) < lo or (hi is not None and len(params) > hi):
        raise ExpressionParseError(
            "%s takes %s parameters, got %d"
            % (name, lo if lo == hi else "at least %d" % lo, len(params)),
            expr, len(expr))
    return Expression(name, params, expr)


def parse_density_expr(expr):
    """
    Parse a density expression, e.g. ``"poly:0,1"`` for ``x -> x_0``.

    :rtype: :class:`DensityExpression`
    """
    return DensityExpression(parse_expr(expr))


def parse_potential_expr(expr):
    """
    Parse a pair potential; the grammar is evaluated at ``|x - y|``.

    :rtype: :class:`RadialExpression`
    """
    return RadialExpression(parse_expr(expr))


def check_nonnegative(density, window, path="density"):
    if density.inf_on(window) < 0:
        raise ValidationError("%r takes negative values on %r"
                              % (density.expr, window), path)
