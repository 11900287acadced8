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
Declarative experiments: a JSON spec names a kind of computation and its
parameters; running it produces a :class:`Report`.
"""

import json
import logging
import time

import numpy as np

from . import __version__
from .bounds import (bound_tv_cox, bound_tv_general, bound_tv_gibbs,
                     bound_tv_poisson, bound_w2_halfline, bound_w2_timechange)
from .concentration.isoperimetry import (isoperimetric_ratio,
                                         isoperimetric_report,
                                         surface_measure)
from .concentration.tails import tail_grid, write_tail_grid_csv
from .configuration import Configuration
from .errors import ExperimentError, PPTError, ValidationError
from .expressions import parse_density_expr, parse_potential_expr
from .gradient import CountEvent, count_functional
from .intensity import IntensityMeasure
from .metrics import METRICS, rho_by_name
from .processes.couplings import SuperpositionCoupling, TimeChangeCoupling
from .processes.gibbs import GibbsDensity, PairPotential, normalizing_constant
from .processes.mixer import Mixer
from .processes.poisson import poisson_likelihood_ratio
from .processes.process import PointProcess
from .processes.timechange import TimeChangeSpec
from .seed import MAX_SEED, SeedSpec
from .transport.empirical import (dual_lower_bound,
                                  estimate_rubinstein_empirical)
from .utils import json_safe
from .window import Window

logger = logging.getLogger(__name__)

KINDS = ('distance', 'sample', 'bound', 'estimate', 'tail', 'isoperimetry',
         'verify')
SPEC_KEYS = ('kind', 'parameters', 'seed', 'stream_id', 'n_samples',
             'output_path')
DEFAULT_SEED = 0
DEFAULT_N_SAMPLES = 1000


def _int_field(value, path, low=0, high=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError("must be an integer", path)
    if value < low or (high is not None and value >= high):
        raise ValidationError("out of range", path)
    return value


class ExperimentSpec(object):

    def __init__(self, kind, parameters=None, seed=DEFAULT_SEED, stream_id=0,
                 n_samples=DEFAULT_N_SAMPLES, output_path=None):
        if kind not in KINDS:
            raise ValidationError("unknown kind %r; expected one of %s"
                                  % (kind, ", ".join(KINDS)), "kind")
        if parameters is None:
            parameters = {}
        if not isinstance(parameters, dict):
            raise ValidationError("must be an object", "parameters")
        self.kind = kind
        self.parameters = parameters
        self.seed = _int_field(seed, "seed", 0, MAX_SEED)
        self.stream_id = _int_field(stream_id, "stream_id")
        self.n_samples = _int_field(n_samples, "n_samples", 1)
        if output_path is not None and not isinstance(output_path, str):
            raise ValidationError("must be a string", "output_path")
        self.output_path = output_path

    @classmethod
    def from_dict(cls, d):
        """
        Strict parsing: keys outside the spec schema are rejected.
        """
        if not isinstance(d, dict):
            raise ValidationError("experiment spec must be a JSON object")
        for key in d:
            if key not in SPEC_KEYS:
                raise ValidationError("unknown key %r" % key, key)
        if 'kind' not in d:
            raise ValidationError("missing required key", "kind")
        return cls(**d)

    @classmethod
    def from_json(cls, text):
        try:
            d = json.loads(text)
        except ValueError as e:
            raise ValidationError("invalid JSON: %s" % e)
        return cls.from_dict(d)

    def get_seed(self):
        return SeedSpec(self.seed, self.stream_id)

    def to_dict(self):
        return {'kind': self.kind,
                'parameters': self.parameters,
                'seed': self.seed,
                'stream_id': self.stream_id,
                'n_samples': self.n_samples,
                'output_path': self.output_path}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def __eq__(self, other):
        return isinstance(other, ExperimentSpec) and \
            self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other


class Report(object):
    """
    ``results`` is a list of ``[name, value]`` entries; values are plain
    data, or objects with ``to_dict``. Only ``wall_time_ms`` varies between
    runs of the same spec.
    """

    def __init__(self, spec_echo, results, wall_time_ms, library_version,
                 passed=None):
        self.spec_echo = spec_echo
        self.results = results
        self.wall_time_ms = int(wall_time_ms)
        self.library_version = library_version
        self.passed = passed

    def get_result(self, name):
        for key, value in self.results:
            if key == name:
                return value
        raise KeyError(name)

    def results_json(self):
        return json.dumps(json_safe([[k, v] for k, v in self.results]),
                          sort_keys=True, indent=2)

    def to_dict(self):
        d = {'spec_echo': self.spec_echo.to_dict(),
             'results': json_safe([[k, v] for k, v in self.results]),
             'wall_time_ms': self.wall_time_ms,
             'library_version': self.library_version}
        if self.passed is not None:
            d['passed'] = self.passed
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


class Parameters(object):
    """
    Typed access to ``spec.parameters`` with field paths in errors. Keys
    that are never read are reported as unknown by :meth:`check_used`.
    """

    def __init__(self, d, path='parameters'):
        self.d = d
        self.path = path
        self.used = set()

    def sub(self, key):
        return "%s.%s" % (self.path, key)

    def has(self, key):
        return key in self.d

    def get(self, key, default=None):
        self.used.add(key)
        return self.d.get(key, default)

    def require(self, key):
        if key not in self.d:
            raise ValidationError("missing required parameter", self.sub(key))
        return self.get(key)

    def number(self, key, default=None):
        value = self.get(key, default)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValidationError("must be a number", self.sub(key))
        return float(value)

    def integer(self, key, default=None, low=0):
        return _int_field(self.get(key, default), self.sub(key), low)

    def nested(self, key, default=None):
        value = self.get(key, default)
        if not isinstance(value, dict):
            raise ValidationError("must be an object", self.sub(key))
        return Parameters(value, self.sub(key))

    def check_used(self):
        for key in self.d:
            if key not in self.used:
                raise ValidationError("unknown parameter", self.sub(key))


def build_window(params):
    return Window.parse(params.get('window', [0.0, 1.0]), params.sub('window'))


def build_intensity(params, window, key='density'):
    expr = params.get(key, 'const:1')
    sup = params.get('density_sup') if key == 'density' else None
    try:
        return IntensityMeasure.parse(expr, window, sup)
    except ValidationError as e:
        raise ValidationError(str(e), params.sub(key))


def build_potential(params):
    phi = parse_potential_expr(params.require('phi'))
    include = params.get('include_diagonal', True)
    if not isinstance(include, bool):
        raise ValidationError("must be true or false",
                              params.sub('include_diagonal'))
    constant = phi.g.params[0] if phi.g.kind == 'const' else None
    if constant is not None and constant < 0:
        raise ValidationError("pair potential must be nonnegative",
                              params.sub('phi'))
    return PairPotential(phi, include, constant_value=constant)


def build_mixer(params):
    try:
        return Mixer.from_dict(params.get('mixer', {'family': 'constant'}))
    except ValidationError as e:
        raise ValidationError(str(e), params.sub('mixer'))


def build_time_change(params):
    return TimeChangeSpec.from_dict(params.get('time_change', {}),
                                    params.sub('time_change'))


def build_process(params, window):
    """
    A :class:`PointProcess` from ``{"process": ..., "density": ...}`` plus
    the family's own fields.
    """
    kind = params.get('process', 'poisson')
    sigma = build_intensity(params, window)
    if kind == 'poisson':
        return PointProcess('poisson', sigma)
    if kind == 'cox':
        return PointProcess('cox', sigma, build_mixer(params))
    if kind == 'gibbs':
        return PointProcess('gibbs', build_potential(params), sigma)
    raise ValidationError("unknown process %r" % kind, params.sub('process'))


def build_configuration(params, key, window):
    data = params.require(key)
    if not isinstance(data, list):
        raise ValidationError("must be a list of points", params.sub(key))
    try:
        return Configuration.from_list(data, window)
    except ValidationError as e:
        raise ValidationError(str(e), params.sub(key))


class ExperimentRunner(object):
    """
    Runs one :class:`ExperimentSpec`. Each kind is handled by the method
    named in ``kind_handlers``.
    """

    kind_handlers = {
        'distance': 'run_distance',
        'sample': 'run_sample',
        'bound': 'run_bound',
        'estimate': 'run_estimate',
        'tail': 'run_tail',
        'isoperimetry': 'run_isoperimetry',
        'verify': 'run_verify',
    }

    def __init__(self, spec):
        self.spec = spec
        self.params = Parameters(spec.parameters)
        self.seed = spec.get_seed()
        self.passed = None

    def run(self):
        start = time.time()
        handler = getattr(self, self.kind_handlers[self.spec.kind])
        try:
            results = handler()
            self.params.check_used()
        except ValidationError:
            raise
        except PPTError as e:
            logger.error("%s experiment failed: %s", self.spec.kind, e)
            raise ExperimentError(self.spec.to_dict(), e)
        elapsed = int(round((time.time() - start) * 1000))
        return Report(self.spec, results, elapsed, __version__, self.passed)

    def run_distance(self):
        p = self.params
        window = build_window(p)
        omega = build_configuration(p, 'omega', window)
        eta = build_configuration(p, 'eta', window)
        names = p.get('metrics', ['rho0', 'rho1', 'rho2', 'rho1_normalized',
                                  'rho2_normalized'])
        if isinstance(names, str):
            names = [names]
        results = []
        for name in names:
            rho = rho_by_name(name)
            if name == 'rho1_normalized' and (omega.is_empty()
                                              or eta.is_empty()):
                results.append([name, None])
                continue
            results.append([name, rho(omega, eta)])
        return results

    def run_sample(self):
        p = self.params
        window = build_window(p)
        count = p.integer('count', 1, low=1)
        hex_floats = bool(p.get('hex_floats', False))
        kind = p.get('process', 'poisson')
        if kind in ('superposition', 'timechange'):
            if kind == 'superposition':
                sigma = build_intensity(p, window)
                coupling = SuperpositionCoupling(
                    sigma, parse_density_expr(p.require('p')),
                    p.get('p_sup'))
            else:
                coupling = TimeChangeCoupling(build_time_change(p))
            pairs = coupling.sample_many(count, self.seed)
            costs = np.array([c.cost_hint for c in pairs])
            return [['pairs', [{'left': c.left.to_list(hex_floats),
                                'right': c.right.to_list(hex_floats),
                                'cost_hint': c.cost_hint} for c in pairs]],
                    ['mean_cost', float(costs.mean())]]
        process = build_process(p, window)
        samples = process.sample_many(count, self.seed)
        counts = np.array([w.count() for w in samples], dtype=float)
        return [['configurations', [w.to_list(hex_floats) for w in samples]],
                ['count_mean', float(counts.mean())],
                ['count_mean_theory', process.count_mean()]]

    def run_bound(self):
        p = self.params
        family = p.require('family')
        n = self.spec.n_samples
        if family in ('halfline', 'timechange'):
            tc = build_time_change(p)
            if family == 'halfline':
                return [['bound', bound_w2_halfline(tc)]]
            families = None
            if p.has('families'):
                families = []
                for i, f in enumerate(p.get('families')):
                    f = dict(f)
                    weight = float(f.pop('weight', 1.0))
                    families.append((TimeChangeSpec.from_dict(
                        f, p.sub('families[%d]' % i)), weight))
            return [['bound', bound_w2_timechange(tc, families=families)]]
        window = build_window(p)
        sigma = build_intensity(p, window)
        if family == 'poisson':
            result = bound_tv_poisson(parse_density_expr(p.require('p')),
                                      sigma)
        elif family == 'cox':
            result = bound_tv_cox(sigma, build_mixer(p), n, self.seed)
        elif family == 'gibbs':
            result = bound_tv_gibbs(build_potential(p), sigma)
        elif family == 'general':
            L = self.build_density_functional(p, sigma)
            result = bound_tv_general(L, sigma, n, self.seed)
        else:
            raise ValidationError("unknown bound family %r" % family,
                                  p.sub('family'))
        return [['bound', result]]

    def build_density_functional(self, p, sigma):
        """
        The density of a Poisson law (``p``) or of a Gibbs law (``phi``)
        against the Poisson law of ``sigma``.
        """
        if p.has('p'):
            return poisson_likelihood_ratio(
                parse_density_expr(p.get('p')), sigma)
        potential = build_potential(p)
        z = normalizing_constant(potential, sigma, self.spec.n_samples,
                                 self.seed.substream(1))
        return GibbsDensity(potential, z.exact if z.exact else z.mean)

    def run_estimate(self):
        p = self.params
        window = build_window(p)
        mu_params = p.nested('mu')
        nu_params = p.nested('nu')
        mu = build_process(mu_params, window)
        nu = build_process(nu_params, window)
        mu_params.check_used()
        nu_params.check_used()
        metric = p.get('metric', 'rho1')
        if metric not in METRICS:
            raise ValidationError("unknown metric %r" % metric,
                                  p.sub('metric'))
        n = p.integer('n', 200, low=1)
        cells = p.get('cells')
        samples_mu = mu.sample_many(n, self.seed.substream(0))
        samples_nu = nu.sample_many(n, self.seed.substream(1))
        primal = estimate_rubinstein_empirical(
            samples_mu, samples_nu, metric, cells, self.seed.substream(2))
        results = [['primal', primal]]
        if p.get('dual', 'count') == 'count':
            results.append(['dual', dual_lower_bound(count_functional(),
                                                     samples_mu, samples_nu,
                                                     seed=self.seed)])
        return results

    def run_tail(self):
        p = self.params
        rows = tail_grid(p.get('masses', [0.5, 1, 2, 5]),
                         p.get('rs', [0.5, 1, 2, 5, 10]))
        csv_path = p.get('csv_path')
        if csv_path:
            write_tail_grid_csv(csv_path, rows)
        return [['grid', rows]]

    def run_isoperimetry(self):
        p = self.params
        window = build_window(p)
        sigma = build_intensity(p, window)
        results = [['report', isoperimetric_report(sigma.total_mass())]]
        events = []
        for i, e in enumerate(p.get('events', [{'kind': 'eq', 'k': 0}])):
            if not isinstance(e, dict):
                raise ValidationError("must be an object",
                                      p.sub('events[%d]' % i))
            fields = Parameters(e, p.sub('events[%d]' % i))
            events.append(CountEvent(fields.get('kind', 'eq'),
                                     fields.get('k', 0)))
            fields.check_used()
        for i, event in enumerate(events):
            seed = self.seed.substream(i)
            results.append([event.describe(), {
                'surface': surface_measure(event, sigma, self.spec.n_samples,
                                           seed),
                'ratio': isoperimetric_ratio(event, sigma,
                                             self.spec.n_samples, seed)}])
        return results

    def run_verify(self):
        from .scenarios import run_scenario
        name = self.params.require('scenario')
        results, checks = run_scenario(name, self.params, self.spec,
                                       self.seed)
        self.passed = all(c['passed'] for c in checks)
        return results + [['checks', checks], ['passed', self.passed]]


def run_experiment(spec):
    """
    Run ``spec`` and return its :class:`Report`.

    :raises ValidationError: for invalid specs, with the field path
    :raises ExperimentError: wrapping any other library error
    """
    return ExperimentRunner(spec).run()
