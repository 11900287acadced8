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
Upper bounds on Rubinstein distances between a Poisson law and a law with a
density against it.

Total variation bounds (for the configuration distance rho1) integrate the
absolute add-one-point gradient of the density; Wasserstein bounds (for
rho2) come from time changes of the half-line.
"""

import logging
import math

import numpy as np

from . import config, quadrature
from .errors import InconsistentBoundError, ValidationError
from .processes.gibbs import PairPotential
from .processes.poisson import draw_poisson
from .seed import Estimate, replicate
from .utils import describe, describe_measure, digest

logger = logging.getLogger(__name__)

METHODS = ('closed_form', 'quadrature', 'monte_carlo')
AGREEMENT_RTOL = 1e-6


class BoundResult(object):
    """
    A bound value with the way it was obtained. ``inputs_digest`` hashes the
    inputs, including sample size and seed for Monte Carlo bounds, so two
    results with equal digests were computed from the same problem.
    """

    def __init__(self, value, method, inputs, std_error=0.0, n_samples=None,
                 seed=None, extra=None, warnings=None):
        if method not in METHODS:
            raise ValidationError("unknown bound method %r" % method,
                                  "method")
        if value < 0 and value > -1e-15:
            value = 0.0
        if not value >= 0:
            raise InconsistentBoundError("bound evaluated to %r" % value)
        self.value = float(value)
        self.method = method
        self.std_error = float(std_error) if method == 'monte_carlo' else 0.0
        self.n_samples = n_samples
        self.seed = seed
        self.inputs = dict(inputs)
        if method == 'monte_carlo':
            self.inputs['n_samples'] = n_samples
            self.inputs['seed'] = seed.to_dict() if seed else None
        self.inputs_digest = digest(self.inputs)
        self.extra = dict(extra or {})
        self.warnings = list(warnings or [])

    @classmethod
    def from_estimate(cls, estimate, inputs, extra=None, warnings=None):
        return cls(max(estimate.mean, 0.0), 'monte_carlo', inputs,
                   estimate.std_error, estimate.n_samples, estimate.seed,
                   extra, warnings)

    def to_dict(self):
        d = {'value': self.value,
             'method': self.method,
             'std_error': self.std_error,
             'inputs_digest': self.inputs_digest}
        if self.method == 'monte_carlo':
            d['n_samples'] = self.n_samples
            d['seed'] = self.seed.to_dict() if self.seed else None
        if self.extra:
            d['extra'] = dict(self.extra)
        if self.warnings:
            d['warnings'] = list(self.warnings)
        return d

    def __repr__(self):
        return "BoundResult(%r, %r, +/- %r)" % (self.value, self.method,
                                                self.std_error)


def bound_tv_poisson(p, sigma):
    """
    ``int |p - 1| dsigma``, the bound between the Poisson laws of ``sigma``
    and ``p * sigma``.

    :raises QuadratureError: with the refinement trace on non-convergence
    """
    breaks = tuple(p.breakpoints()) if hasattr(p, 'breakpoints') else ()
    value = sigma.integrate(lambda pts: np.abs(p(pts) - 1.0),
                            breakpoints=breaks)
    return BoundResult(value, 'quadrature',
                       {'bound': 'tv_poisson', 'p': describe(p),
                        'sigma': describe_measure(sigma)})


def bound_tv_cox(base, mixer, n_samples, seed):
    """
    Monte Carlo of ``E int |dM/dsigma - 1| dsigma = E|Xi - 1| sigma(Lambda)``
    for the Cox process with intensity ``M = Xi * base``. The closed form is
    reported as ``extra['closed_form']``.
    """
    mass = base.total_mass()
    values = replicate(lambda s: abs(mixer.draw(s.rng()) - 1.0) * mass,
                       n_samples, seed)
    est = Estimate.from_samples(values, seed)
    closed = mixer.mean_abs_deviation(1.0) * mass
    return BoundResult.from_estimate(
        est, {'bound': 'tv_cox', 'mixer': mixer.to_dict(),
              'sigma': describe_measure(base)},
        extra={'closed_form': closed})


def bound_tv_gibbs(phi, sigma):
    """
    ``2 int int phi(x - y) dsigma(x) dsigma(y)``. A potential that includes
    the diagonal pairs adds ``phi(0) sigma(Lambda)``.
    """
    potential = phi if isinstance(phi, PairPotential) else PairPotential(phi)
    mass = sigma.total_mass()
    if potential.constant_value is not None:
        pairs = potential.constant_value * mass * mass
        method = 'closed_form'
    else:
        profile = sigma.profile if potential.is_radial() else None
        pairs, err, trace = quadrature.integrate_pairs(
            potential, sigma.density, sigma.window, profile=profile,
            breakpoints=sigma.breakpoints, radii=potential.breakpoints())
        method = 'quadrature'
    value = 2.0 * pairs
    diagonal = 0.0
    if potential.include_diagonal:
        diagonal = potential.at_zero(sigma.dim) * mass
        value += diagonal
    return BoundResult(value, method,
                       {'bound': 'tv_gibbs', 'phi': describe(potential),
                        'sigma': describe_measure(sigma)},
                       extra={'pair_integral': pairs, 'diagonal': diagonal})


def bound_w2_halfline(tc):
    """
    ``||U||`` in ``L^2[0, T]``. ``extra['truncation']`` estimates the
    neglected tail by the integral of ``U^2`` over ``[T, 2T]``.
    """
    T = tc.horizon
    sq = lambda t: tc.U(t) ** 2
    value = quadrature.integrate_1d(sq, 0.0, T)
    tail = quadrature.integrate_1d(sq, T, 2 * T)
    extra = {'horizon': T, 'truncation': tail}
    if tc.l2_squared is not None:
        extra['closed_form'] = math.sqrt(tc.l2_squared)
    return BoundResult(math.sqrt(max(value, 0.0)), 'quadrature',
                       {'bound': 'w2_halfline', 'time_change': tc.name,
                        'horizon': T}, extra=extra)


def timechange_expressions(tc):
    """
    The two forms of the squared time-change cost: the integral of
    ``U^2 (1 + U')`` over ``[0, T]`` and the integral of
    ``|r - v^{-1}(r)|^2`` over ``[0, v(T)]``. They agree by the change of
    variables ``r = v(t)``.
    """
    first = quadrature.integrate_1d(
        lambda t: tc.U(t) ** 2 * (1.0 + tc.U_prime(t)), 0.0, tc.horizon)
    second = quadrature.integrate_1d(
        lambda r: (r - tc.v_inverse(r)) ** 2, 0.0, tc.end())
    return first, second


def bound_w2_timechange(tc, sigma_marks=None, families=None):
    """
    Square root of the mark-weighted time-change cost.

    Marks enter through ``families``, a list of ``(TimeChangeSpec, weight)``
    pairs, or through ``sigma_marks`` whose total mass weights ``tc``.

    :raises InconsistentBoundError: when the two forms of the cost disagree
        beyond 1e-6 relative
    """
    if families is None:
        weight = 1.0 if sigma_marks is None else sigma_marks.total_mass()
        families = [(tc, weight)]
    total = 0.0
    forms = []
    for spec, weight in families:
        if weight < 0:
            raise ValidationError("mark weights must be nonnegative",
                                  "families")
        first, second = timechange_expressions(spec)
        scale = max(abs(first), abs(second))
        if abs(first - second) > AGREEMENT_RTOL * scale + 1e-14:
            raise InconsistentBoundError(
                "time change %s: %r != %r" % (spec.name, first, second))
        forms.append([first, second])
        total += weight * first
    return BoundResult(math.sqrt(max(total, 0.0)), 'quadrature',
                       {'bound': 'w2_timechange',
                        'families': [[s.name, s.horizon, w]
                                     for s, w in families]},
                       extra={'expressions': forms})


def nested_gradient(F, sigma, n_samples, seed, n_inner=1):
    """
    Replicate ``i`` draws ``omega`` from ``seed.substream(i, 0)`` and
    ``n_inner`` points ``x`` from ``seed.substream(i, 1)``; it returns
    ``(F(omega), sigma(Lambda) * mean |F(omega + x) - F(omega)|)``.
    """
    mass = sigma.total_mass()

    def one(s):
        omega = draw_poisson(sigma, s.substream(0).rng())
        f = F(omega)
        if mass == 0:
            return f, 0.0
        xs = sigma.sample_points(n_inner, s.substream(1).rng())
        grads = [abs(F(omega.add(x)) - f) for x in xs]
        return f, mass * float(np.mean(grads))

    logger.debug("nested gradient integral: %d x %d draws from %r",
                 n_samples, n_inner, seed)
    pairs = replicate(one, n_samples, seed)
    values = np.array([p[0] for p in pairs], dtype=float)
    grads = np.array([p[1] for p in pairs], dtype=float)
    return values, grads


def check_normalization(values, seed, sigmas=None):
    """
    Compare the sample mean of a density functional with 1; returns the
    estimate and a warning message, or None when it passes.
    """
    sigmas = config.NORMALIZATION_SIGMAS if sigmas is None else sigmas
    est = Estimate.from_samples(values, seed)
    if abs(est.mean - 1.0) > sigmas * est.std_error + 1e-9:
        msg = ("density mean %.6g differs from 1 by more than %g standard "
               "errors (%.3g)" % (est.mean, sigmas, est.std_error))
        logger.warning(msg)
        return est, msg
    return est, None


def bound_tv_general(L, sigma, n_samples, seed, n_inner=1):
    """
    Monte Carlo of ``E int |L(omega + eps_x) - L(omega)| dsigma(x)`` under
    the Poisson law of ``sigma``, for a density functional ``L`` of the
    target law.

    The mean of ``L`` is checked against 1; a failed check is reported in
    ``warnings`` rather than raised.
    """
    values, grads = nested_gradient(L, sigma, n_samples, seed, n_inner)
    norm, warning = check_normalization(values, seed)
    est = Estimate.from_samples(grads, seed)
    return BoundResult.from_estimate(
        est, {'bound': 'tv_general', 'L': describe(L),
              'sigma': describe_measure(sigma), 'n_inner': n_inner},
        extra={'normalization_mean': norm.mean,
               'normalization_std_error': norm.std_error},
        warnings=[warning] if warning else [])


def bound_tv_rho0(L, sigma, n_samples, seed):
    """
    ``E|L - 1| / 2`` under the Poisson law of ``sigma``: the Rubinstein
    distance for the trivial distance rho0, which never exceeds the
    general total variation bound.
    """
    values = replicate(
        lambda s: 0.5 * abs(L(draw_poisson(sigma, s.rng())) - 1.0),
        n_samples, seed)
    est = Estimate.from_samples(values, seed)
    return BoundResult.from_estimate(
        est, {'bound': 'tv_rho0', 'L': describe(L),
              'sigma': describe_measure(sigma)})
