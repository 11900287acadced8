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
Numerical integration of vectorized integrands over windows.

Integrands take an ``(n, d)`` array of points and return ``(n,)`` values.
One dimensional windows use globally adaptive Gauss-Legendre (10 against 20
nodes per interval). Two and three dimensional windows run the same adaptive
rule along axis 0, where the parsed densities vary, over cross-sections
integrated on composite tensor Gauss-Legendre grids with Richardson
refinement. Pair integrals for radial potentials are reduced to the
difference variable and split where the potential jumps.
"""

import itertools
import logging

import numpy as np
from numpy.polynomial.legendre import leggauss

from . import config
from .errors import QuadratureError, UnsupportedDimensionError

logger = logging.getLogger(__name__)

MAX_DIM = 3
TENSOR_NODES = 8
RICHARDSON_ORDER = 2 * TENSOR_NODES
SLICE_RTOL_FACTOR = 0.1
MAX_SLICE_POINTS = 65536
MAX_TENSOR_POINTS = 2200000
MAX_PAIR_NODES = 4500
PAIR_BLOCK = 1000000
INITIAL_INTERVALS = 8

_RULES = {}


def gauss_rule(q):
    """ Nodes and weights of the q-point rule on [-1, 1], cached. """
    if q not in _RULES:
        _RULES[q] = leggauss(q)
    return _RULES[q]


def _evaluate(f, pts):
    vals = np.asarray(f(pts), dtype=float)
    if vals.shape != (pts.shape[0],):
        vals = np.broadcast_to(vals, (pts.shape[0],)).astype(float)
    return vals


def _interval_rules(f, a, b):
    """
    G10 and G20 values on each interval ``[a_i, b_i]``.
    """
    x10, w10 = gauss_rule(10)
    x20, w20 = gauss_rule(20)
    mid = 0.5 * (a + b)[:, None]
    half = 0.5 * (b - a)[:, None]
    nodes = np.hstack([mid + half * x10, mid + half * x20])
    vals = _evaluate(f, nodes.reshape(-1, 1)).reshape(nodes.shape)
    g10 = (vals[:, :10] * w10).sum(axis=1) * half[:, 0]
    g20 = (vals[:, 10:] * w20).sum(axis=1) * half[:, 0]
    return g20, np.abs(g20 - g10)


def adaptive_gauss_legendre(f, a, b, rtol=None, atol=None,
                            max_intervals=None, breakpoints=()):
    """
    Integrate ``f`` over ``[a, b]``.

    Intervals whose G10/G20 disagreement exceeds their share of the
    tolerance are bisected until the summed disagreement is below
    ``max(rtol * |I|, atol)``.

    :param breakpoints: extra points where the integrand may have a kink
        or jump; they become initial interval endpoints
    :returns: (value, error estimate, trace)
    :raises QuadratureError: when ``max_intervals`` is reached first
    """
    rtol = config.QUADRATURE_RTOL if rtol is None else rtol
    atol = config.QUADRATURE_ATOL if atol is None else atol
    max_intervals = max_intervals or config.QUADRATURE_MAX_INTERVALS

    edges = np.linspace(a, b, INITIAL_INTERVALS + 1)
    inner = [p for p in breakpoints if a < p < b]
    if inner:
        edges = np.unique(np.concatenate([edges, inner]))
    lo, hi = edges[:-1], edges[1:]
    vals, errs = _interval_rules(f, lo, hi)
    trace = []
    step = 0
    while True:
        total = vals.sum()
        err = errs.sum()
        tol = max(rtol * abs(total), atol)
        trace.append((step, float(total), float(err)))
        if err <= tol:
            return float(total), float(err), trace
        if len(lo) >= max_intervals:
            raise QuadratureError(
                "adaptive quadrature on [%r, %r] stopped at %d intervals "
                "with error %.3g > %.3g" % (a, b, len(lo), err, tol), trace)
        share = tol / len(lo)
        split = errs > share
        # always refine the worst interval so progress is guaranteed
        split[np.argmax(errs)] = True
        room = max_intervals - len(lo)
        idx = np.flatnonzero(split)
        if len(idx) > room:
            idx = idx[np.argsort(errs[idx])[::-1][:room]]
            split = np.zeros_like(split)
            split[idx] = True
        mids = 0.5 * (lo[split] + hi[split])
        new_lo = np.concatenate([lo[split], mids])
        new_hi = np.concatenate([mids, hi[split]])
        new_vals, new_errs = _interval_rules(f, new_lo, new_hi)
        keep = ~split
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        vals = np.concatenate([vals[keep], new_vals])
        errs = np.concatenate([errs[keep], new_errs])
        step += 1


def richardson(coarse, fine, order=RICHARDSON_ORDER):
    """
    Extrapolate two composite-rule values whose subinterval widths differ
    by a factor 2, for a rule with error of order ``h^order``.
    """
    return fine + (fine - coarse) / (2.0 ** order - 1.0)


def tensor_rule(lower, upper, m, q=TENSOR_NODES):
    """
    Nodes ``(n, k)`` and weights ``(n,)`` of the composite rule on the box
    ``[lower, upper]`` with ``m`` subintervals of ``q`` Gauss nodes along
    each axis.
    """
    x, w = gauss_rule(q)
    axes_x = []
    axes_w = []
    for lo, hi in zip(lower, upper):
        edges = np.linspace(lo, hi, m + 1)
        mid = 0.5 * (edges[:-1] + edges[1:])[:, None]
        half = 0.5 * (edges[1:] - edges[:-1])[:, None]
        axes_x.append((mid + half * x).ravel())
        axes_w.append((half * w).ravel())
    grids = np.meshgrid(*axes_x, indexing='ij')
    nodes = np.stack([g.ravel() for g in grids], axis=1)
    weights = axes_w[0]
    for aw in axes_w[1:]:
        weights = np.multiply.outer(weights, aw).ravel()
    return nodes, weights


def _slice_integrals(f, t, nodes, weights):
    k = nodes.shape[1]
    rows = max(1, PAIR_BLOCK // len(nodes))
    out = np.empty(len(t))
    for start in range(0, len(t), rows):
        block = t[start:start + rows]
        pts = np.empty((len(block), len(nodes), k + 1))
        pts[:, :, 0] = block[:, None]
        pts[:, :, 1:] = nodes[None, :, :]
        vals = _evaluate(f, pts.reshape(-1, k + 1))
        out[start:start + rows] = vals.reshape(len(block), len(nodes)) @ weights
    return out


def _cross_sections(f, t, lower, upper, rtol, atol):
    """
    For each ``t_i`` the integral of ``f`` over the slice
    ``{t_i} x [lower, upper]``, by tensor rules doubled until every slice
    agrees with the previous level, then extrapolated.
    """
    t = np.asarray(t, dtype=float)
    m = 1
    nodes, weights = tensor_rule(lower, upper, m)
    prev = _slice_integrals(f, t, nodes, weights)
    while True:
        m *= 2
        nodes, weights = tensor_rule(lower, upper, m)
        if len(nodes) > MAX_SLICE_POINTS:
            raise QuadratureError("cross-section quadrature did not converge "
                                  "within %d points" % MAX_SLICE_POINTS)
        cur = _slice_integrals(f, t, nodes, weights)
        scale = float(np.max(np.abs(cur))) if len(cur) else 0.0
        if np.all(np.abs(cur - prev) <= max(rtol * scale, atol)):
            return richardson(prev, cur)
        prev = cur


def tensor_integrate(f, window, rtol=None, atol=None, breakpoints=()):
    """
    Integral over a box of dimension 2 or 3: adaptive Gauss-Legendre along
    axis 0, split at ``breakpoints``, of cross-sections integrated by tensor
    rules with Richardson refinement. The integrand may jump or kink across
    hyperplanes ``x_0 = c``; along the other axes it must be smooth.

    :returns: (value, error estimate, trace)
    """
    rtol = config.QUADRATURE_RTOL if rtol is None else rtol
    atol = config.QUADRATURE_ATOL if atol is None else atol
    lower, upper = window.lower[1:], window.upper[1:]

    def sections(pts):
        return _cross_sections(f, pts[:, 0], lower, upper,
                               SLICE_RTOL_FACTOR * rtol, atol)

    return adaptive_gauss_legendre(sections, float(window.lower[0]),
                                   float(window.upper[0]), rtol, atol,
                                   breakpoints=breakpoints)


def integrate(f, window, rtol=None, atol=None, breakpoints=()):
    """
    Integral of the vectorized ``f`` over ``window`` against Lebesgue
    measure.

    :param breakpoints: values of ``x_0`` where ``f`` may jump or kink
    :raises UnsupportedDimensionError: for windows of dimension above 3
    :rtype: float
    """
    if window.dim > MAX_DIM:
        raise UnsupportedDimensionError(
            "quadrature supports d <= %d, got d=%d" % (MAX_DIM, window.dim))
    if window.dim == 1:
        value, err, trace = adaptive_gauss_legendre(
            f, float(window.lower[0]), float(window.upper[0]), rtol, atol,
            breakpoints=breakpoints)
    else:
        value, err, trace = tensor_integrate(f, window, rtol, atol,
                                             breakpoints)
    logger.debug("integrated over %r: %r (err %.3g, %d steps)",
                 window, value, err, len(trace))
    return value


def integrate_1d(g, a, b, rtol=None, atol=None, breakpoints=()):
    """
    Integral of a scalar-vectorized ``g`` (1-d array in, 1-d array out)
    over ``[a, b]``.
    """
    if b <= a:
        return 0.0
    value, err, trace = adaptive_gauss_legendre(
        lambda pts: g(pts[:, 0]), a, b, rtol, atol, breakpoints=breakpoints)
    return value


def piecewise_rule(lo, hi, cuts, m, q=TENSOR_NODES):
    """
    Per-row composite rules on ``[lo_i, hi_i]``, with the finite entries of
    row ``cuts_i`` as extra piece boundaries. Each piece is mapped through
    the smoothstep ``s(t) = t^2 (3 - 2 t)``, which turns square-root
    behaviour at a piece end into a smooth integrand.

    :returns: nodes and weights, both of shape ``(n, pieces * m * q)``
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    n = len(lo)
    cuts = np.asarray(cuts, dtype=float).reshape(n, -1)
    cuts = np.where(np.isnan(cuts), lo[:, None], cuts)
    cuts = np.clip(cuts, lo[:, None], hi[:, None])
    edges = np.sort(np.hstack([lo[:, None], cuts, hi[:, None]]), axis=1)
    left = edges[:, :-1, None]
    width = np.diff(edges, axis=1)[:, :, None]
    x, w = gauss_rule(q)
    t = ((np.arange(m)[:, None] + 0.5 * (x + 1.0)) / m).ravel()
    tw = np.tile(w, m) / (2.0 * m)
    s = t * t * (3.0 - 2.0 * t)
    ds = 6.0 * t * (1.0 - t)
    nodes = left + width * s
    weights = width * (ds * tw)
    return nodes.reshape(n, -1), weights.reshape(n, -1)


def _autocorrelation(profile, a, b, breaks, z, m):
    """
    ``int h(x) h(x - z) dx`` over ``[a + z, b]`` for each ``0 <= z_i <= b - a``.
    """
    z = np.asarray(z, dtype=float)
    cuts = [np.full(len(z), c) for c in breaks] + [c + z for c in breaks]
    cuts = np.column_stack(cuts) if cuts else np.empty((len(z), 0))
    nodes, weights = piecewise_rule(a + z, np.full(len(z), b), cuts, m)
    vals = np.asarray(profile(nodes), dtype=float) * \
        np.asarray(profile(nodes - z[:, None]), dtype=float)
    return (vals * weights).sum(axis=1)


def _radial_cuts(radii, s, rest):
    """
    Where the next coordinate meets the spheres ``|z| = r``, given the squared
    norm ``s`` of the coordinates fixed so far, with any subset of the
    remaining axes held at its full length.
    """
    cuts = []
    for r in radii:
        for held in itertools.product((0, 1), repeat=len(rest)):
            arg = r * r - s - sum(h * L * L for h, L in zip(held, rest))
            cuts.append(np.sqrt(np.where(arg > 0, arg, np.nan)))
    return cuts


def _separable_pairs(phi, profile, window, breaks, radii, kinks, m):
    a, b = float(window.lower[0]), float(window.upper[0])
    lengths = window.upper - window.lower
    d = window.dim
    z = np.zeros((1, 0))
    wt = np.ones(1)
    s = np.zeros(1)
    for k in range(d):
        n = len(wt)
        cuts = _radial_cuts(radii, s, lengths[k + 1:])
        if k == 0:
            cuts += [np.full(n, c) for c in kinks]
        cuts = np.column_stack(cuts) if cuts else np.empty((n, 0))
        nodes, weights = piecewise_rule(np.zeros(n), np.full(n, lengths[k]),
                                        cuts, m)
        if nodes.size > MAX_TENSOR_POINTS:
            return None
        if k == 0:
            factor = _autocorrelation(profile, a, b, breaks, nodes[0], m)
        else:
            factor = lengths[k] - nodes
        z = np.hstack([np.repeat(z, nodes.shape[1], axis=0),
                       nodes.reshape(-1, 1)])
        wt = (wt[:, None] * weights * factor).ravel()
        s = (s[:, None] + nodes * nodes).ravel()
    total = 0.0
    for start in range(0, len(wt), PAIR_BLOCK):
        block = slice(start, start + PAIR_BLOCK)
        total += float(_evaluate(phi, z[block]) @ wt[block])
    # phi, the autocorrelation and the triangle weights are even in each z_i
    return 2.0 ** d * total


def _pair_sum(phi, nodes, wf):
    total = 0.0
    n = len(nodes)
    rows = max(1, PAIR_BLOCK // max(n, 1))
    for start in range(0, n, rows):
        block = nodes[start:start + rows]
        diffs = (block[:, None, :] - nodes[None, :, :]).reshape(-1, nodes.shape[1])
        vals = _evaluate(phi, diffs).reshape(len(block), n)
        total += float(wf[start:start + rows] @ vals @ wf)
    return total


def _tensor_pairs(phi, f, window, rtol, atol):
    m = 1
    nodes, weights = tensor_rule(window.lower, window.upper, m)
    prev = _pair_sum(phi, nodes, weights * _evaluate(f, nodes))
    trace = [(m, prev, float('inf'))]
    while True:
        m *= 2
        if (TENSOR_NODES * m) ** window.dim > MAX_PAIR_NODES:
            raise QuadratureError("pair quadrature did not converge", trace)
        nodes, weights = tensor_rule(window.lower, window.upper, m)
        cur = _pair_sum(phi, nodes, weights * _evaluate(f, nodes))
        err = abs(cur - prev)
        trace.append((m, cur, err))
        if err <= max(rtol * abs(cur), atol):
            return richardson(prev, cur), err, trace
        prev = cur


def integrate_pairs(phi, f, window, rtol=None, atol=None, profile=None,
                    breakpoints=(), radii=()):
    """
    The double integral of ``phi(x - y) f(x) f(y)`` over ``window`` squared.

    When ``f(x) = profile(x_0)`` and ``phi`` is radial the integral is taken
    in the difference variable ``z = x - y``, where the integrand is ``phi(z)``
    times the autocorrelation of ``profile`` in ``z_0`` times the triangle
    weights ``L_i - |z_i|`` of the other axes. Each coordinate is split
    where it meets the spheres ``|z| = r`` for ``r`` in ``radii`` and, along
    ``z_0``, where the autocorrelation has kinks from the density
    ``breakpoints``. Without ``profile`` the integral is taken on tensor
    grids in ``(x, y)``, which needs a smooth integrand.

    :returns: (value, error estimate, trace)
    """
    if window.dim > MAX_DIM:
        raise UnsupportedDimensionError(
            "quadrature supports d <= %d, got d=%d" % (MAX_DIM, window.dim))
    rtol = config.PAIR_QUADRATURE_RTOL if rtol is None else rtol
    atol = config.QUADRATURE_ATOL if atol is None else atol
    if profile is None:
        return _tensor_pairs(phi, f, window, rtol, atol)

    a, b = float(window.lower[0]), float(window.upper[0])
    breaks = sorted(set(float(c) for c in breakpoints if a < c < b))
    kinks = [c - a for c in breaks] + [b - c for c in breaks] + \
        [abs(c - e) for c, e in itertools.combinations(breaks, 2)]
    radii = [float(r) for r in radii if r > 0]
    m = 1
    prev = None
    trace = []
    while True:
        cur = _separable_pairs(phi, profile, window, breaks, radii, kinks, m)
        if cur is None:
            raise QuadratureError("pair quadrature did not converge within "
                                  "%d points" % MAX_TENSOR_POINTS, trace)
        if prev is None:
            trace.append((m, cur, float('inf')))
        else:
            err = abs(cur - prev)
            trace.append((m, cur, err))
            if err <= max(rtol * abs(cur), atol):
                return richardson(prev, cur), err, trace
        prev = cur
        m *= 2
