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


import json
import math

import pytest

from ppt.configuration import Configuration
from ppt.errors import ExperimentError, ValidationError
from ppt.experiment import ExperimentSpec, run_experiment
from ppt.window import Window


def spec(kind, **parameters):
    return ExperimentSpec(kind, parameters, seed=7, n_samples=200)


class TestExperimentSpec:
    def test_unknown_key(self):
        with pytest.raises(ValidationError) as e:
            ExperimentSpec.from_dict({'kind': 'bound', 'foo': 1})
        assert e.value.path == 'foo'

    def test_round_trip(self):
        s = ExperimentSpec('tail', {'masses': [1]}, seed=3, stream_id=2,
                           n_samples=10, output_path='out.json')
        assert ExperimentSpec.from_json(s.to_json()) == s

    def test_defaults(self):
        s = ExperimentSpec.from_dict({'kind': 'verify'})
        assert s.seed == 0
        assert s.n_samples == 1000
        assert s.parameters == {}

    @pytest.mark.parametrize('d,path', [
        ({'kind': 'plot'}, 'kind'),
        ({'kind': 'bound', 'seed': -1}, 'seed'),
        ({'kind': 'bound', 'n_samples': 0}, 'n_samples'),
        ({'kind': 'bound', 'parameters': []}, 'parameters'),
        ({'seed': 1}, 'kind'),
    ])
    def test_invalid_fields(self, d, path):
        with pytest.raises(ValidationError) as e:
            ExperimentSpec.from_dict(d)
        assert e.value.path == path

    def test_invalid_json(self):
        with pytest.raises(ValidationError):
            ExperimentSpec.from_json('{kind: bound')


class TestRunExperiment:
    def test_minimal_bound(self):
        report = run_experiment(spec('bound', family='poisson', p='const:2',
                                     window=[0, 1]))
        assert report.get_result('bound').value == pytest.approx(1.0,
                                                                 abs=1e-8)
        d = json.loads(report.to_json())
        assert d['spec_echo']['kind'] == 'bound'
        assert d['library_version']
        assert 'passed' not in d

    def test_deterministic(self):
        s = spec('bound', family='cox', density='const:2',
                 mixer={'family': 'gamma', 'shape': 2.0, 'scale': 0.5})
        assert run_experiment(s).results_json() == \
            run_experiment(s).results_json()

    def test_unknown_parameter(self):
        with pytest.raises(ValidationError) as e:
            run_experiment(spec('bound', family='poisson', p='const:2',
                                bogus=1))
        assert e.value.path == 'parameters.bogus'

    def test_parse_error(self):
        with pytest.raises(ValidationError):
            run_experiment(spec('bound', family='poisson', p='const:x'))

    def test_distance(self):
        report = run_experiment(spec('distance', window=[0, 2],
                                     omega=[[0.0], [1.0]],
                                     eta=[[0.2], [1.1]]))
        assert report.get_result('rho1') == 4
        assert report.get_result('rho2') == pytest.approx(math.sqrt(0.05))
        assert report.get_result('rho0') == 1

    def test_distance_infinite(self):
        report = run_experiment(spec('distance', omega=[[0.0]],
                                     eta=[[0.0], [1.0]], metrics=['rho2']))
        assert json.loads(report.results_json()) == [['rho2', 'inf']]

    def test_sample_hex_round_trip(self):
        report = run_experiment(spec('sample', density='const:5', count=3,
                                     hex_floats=True))
        configs = report.get_result('configurations')
        assert len(configs) == 3
        window = Window.unit(1)
        again = run_experiment(spec('sample', density='const:5', count=3))
        for hexed, plain in zip(configs,
                                again.get_result('configurations')):
            assert Configuration.from_list(hexed, window).atoms.tolist() == \
                plain

    def test_sample_coupling(self):
        report = run_experiment(spec('sample', process='superposition',
                                     p='const:2', count=5))
        assert len(report.get_result('pairs')) == 5

    def test_gibbs_bound(self):
        report = run_experiment(spec('bound', family='gibbs', phi='const:0.05',
                                     include_diagonal=False))
        assert report.get_result('bound').value == pytest.approx(0.1)

    def test_halfline_bound(self):
        report = run_experiment(spec('bound', family='halfline',
                                     time_change={'family':
                                                  'cubic_rational'}))
        assert report.get_result('bound').value == \
            pytest.approx(0.577350, abs=1e-6)

    def test_estimate(self):
        report = run_experiment(spec('estimate', n=100, cells=1,
                                     mu={'density': 'const:1'},
                                     nu={'density': 'const:2'}))
        primal = report.get_result('primal')
        dual = report.get_result('dual')
        assert primal.extra['n_mu'] == 100
        assert dual.mean <= primal.mean + 3 * (dual.std_error
                                               + primal.std_error)

    def test_estimate_unknown_nested_key(self):
        with pytest.raises(ValidationError) as e:
            run_experiment(spec('estimate', mu={'densty': 'const:1'},
                                nu={}))
        assert e.value.path == 'parameters.mu.densty'

    def test_tail_csv(self, tmp_path):
        path = str(tmp_path / 'tails.csv')
        report = run_experiment(spec('tail', masses=[1], rs=[1, 2],
                                     csv_path=path))
        assert len(report.get_result('grid')) == 2
        with open(path) as f:
            assert len(f.read().splitlines()) == 3

    def test_library_error_is_wrapped(self):
        with pytest.raises(ExperimentError) as e:
            run_experiment(spec('isoperimetry',
                                events=[{'kind': 'ge', 'k': 0}]))
        assert e.value.spec_echo['kind'] == 'isoperimetry'

    def test_isoperimetry_unknown_event_key(self):
        with pytest.raises(ValidationError) as e:
            run_experiment(spec('isoperimetry',
                                events=[{'kind': 'eq', 'k': 0},
                                        {'kind': 'le', 'kk': 1}]))
        assert e.value.path == 'parameters.events[1].kk'

    def test_isoperimetry(self):
        report = run_experiment(spec('isoperimetry'))
        assert report.get_result('report')['factor_two_discrepancy']
        ratio = report.get_result('omega(Lambda) == 0')['ratio']
        assert ratio.exact == pytest.approx(3.163953, abs=1e-6)


class TestVerify:
    @pytest.mark.parametrize('name,params', [
        ('assignment', {'instances': 50}),
        ('rho2', {'pairs': 50}),
        ('stirling', {}),
        ('semicontinuity', {}),
        ('tail-grid', {}),
        ('laplace-sharpness', {}),
    ])
    def test_fast_scenarios_pass(self, name, params):
        params = dict(params, scenario=name)
        report = run_experiment(spec('verify', **params))
        assert report.passed is True
        assert all(c['passed'] for c in report.get_result('checks'))

    def test_unknown_scenario(self):
        with pytest.raises(ValidationError) as e:
            run_experiment(spec('verify', scenario='everything'))
        assert e.value.path == 'parameters.scenario'
