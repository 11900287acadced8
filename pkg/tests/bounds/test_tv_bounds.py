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


import math

import numpy as np
import pytest

from ppt.bounds import (BoundResult, bound_tv_cox, bound_tv_general,
                        bound_tv_gibbs, bound_tv_poisson, bound_tv_rho0)
from ppt.errors import InconsistentBoundError, ValidationError
from ppt.expressions import parse_density_expr, parse_potential_expr
from ppt.intensity import IntensityMeasure
from ppt.processes.gibbs import GibbsDensity, PairPotential, \
    constant_acceptance
from ppt.processes.mixer import Mixer
from ppt.processes.poisson import poisson_likelihood_ratio
from ppt.seed import SeedSpec
from ppt.window import Window
from tests.test_utils import unit_intensity


class TestBoundResult:
    def test_digest_tracks_inputs(self):
        a = BoundResult(1.0, 'closed_form', {'x': 1})
        b = BoundResult(2.0, 'closed_form', {'x': 1})
        c = BoundResult(1.0, 'closed_form', {'x': 2})
        assert a.inputs_digest == b.inputs_digest
        assert a.inputs_digest != c.inputs_digest

    def test_monte_carlo_digest_includes_seed(self):
        a = BoundResult(1.0, 'monte_carlo', {}, 0.1, 10, SeedSpec(1))
        b = BoundResult(1.0, 'monte_carlo', {}, 0.1, 10, SeedSpec(2))
        assert a.inputs_digest != b.inputs_digest
        assert a.to_dict()['n_samples'] == 10

    def test_invalid(self):
        with pytest.raises(ValidationError):
            BoundResult(1.0, 'guess', {})
        with pytest.raises(InconsistentBoundError):
            BoundResult(-1.0, 'closed_form', {})
        assert BoundResult(-1e-17, 'quadrature', {}).value == 0.0


class TestPoissonBound:
    def setup_method(self, method):
        self.sigma = unit_intensity(1.0)

    def test_doubling(self):
        bound = bound_tv_poisson(parse_density_expr('const:2'), self.sigma)
        assert bound.value == pytest.approx(1.0, abs=1e-8)
        assert bound.method == 'quadrature'

    def test_identity(self):
        assert bound_tv_poisson(parse_density_expr('const:1'),
                                self.sigma).value == 0.0

    def test_step(self):
        bound = bound_tv_poisson(parse_density_expr('step:0.5,0,2'),
                                 self.sigma)
        assert bound.value == pytest.approx(1.0, abs=1e-8)

    def test_linear(self):
        # int |x / 2 + 1/2 - 1| over [0, 1] = 1/4
        bound = bound_tv_poisson(parse_density_expr('poly:0.5,0.5'),
                                 self.sigma)
        assert bound.value == pytest.approx(0.25, abs=1e-8)

    def test_monotone_in_deviation(self):
        # p = 1 + t (2x - 1) deviates from 1 by t |2x - 1|, integral t / 2
        values = [bound_tv_poisson(parse_density_expr(
            'poly:%r,%r' % (1 - t, 2 * t)), self.sigma).value
            for t in (0.0, 0.1, 0.4, 0.8, 1.0)]
        assert values == sorted(values)
        assert values[-1] == pytest.approx(0.5, abs=1e-8)
        assert values[2] == pytest.approx(0.2, abs=1e-8)
        low = bound_tv_poisson(parse_density_expr('step:0.5,1,1.5'),
                               self.sigma).value
        high = bound_tv_poisson(parse_density_expr('step:0.5,0.8,1.5'),
                                self.sigma).value
        assert low < high


class TestCoxBound:
    def test_closed_form_and_monte_carlo(self):
        base = unit_intensity(2.0)
        mixer = Mixer('gamma', shape=4.0, scale=0.25)
        bound = bound_tv_cox(base, mixer, 4000, SeedSpec(3))
        closed = bound.extra['closed_form']
        assert closed == pytest.approx(2 * mixer.mean_abs_deviation())
        assert abs(bound.value - closed) <= 3 * bound.std_error
        assert bound.method == 'monte_carlo'

    def test_constant_mixer(self):
        bound = bound_tv_cox(unit_intensity(3.0), Mixer('constant',
                                                        value=1.5),
                             10, SeedSpec(0))
        assert bound.value == pytest.approx(1.5)
        assert bound.std_error == 0.0


class TestGibbsBound:
    def test_constant_without_diagonal(self):
        bound = bound_tv_gibbs(PairPotential.constant(0.05, False),
                               unit_intensity(1.0))
        assert bound.value == pytest.approx(0.1, abs=1e-12)
        assert bound.method == 'closed_form'
        assert bound.extra['diagonal'] == 0.0

    def test_constant_with_diagonal(self):
        bound = bound_tv_gibbs(PairPotential.constant(0.05),
                               unit_intensity(2.0))
        # 2 * 0.05 * 4 + 0.05 * 2
        assert bound.value == pytest.approx(0.5, abs=1e-12)

    def test_gaussian_potential(self):
        phi = PairPotential(parse_potential_expr('gauss:1,1'),
                            include_diagonal=False)
        bound = bound_tv_gibbs(phi, unit_intensity(1.0))
        # int int e^{-(x-y)^2} over the unit square
        exact = math.sqrt(math.pi) * math.erf(1.0) + math.exp(-1.0) - 1.0
        assert bound.value == pytest.approx(2 * exact, rel=1e-6)
        assert bound.method == 'quadrature'

    def test_step_potential(self):
        phi = parse_potential_expr('step:0.1,1,0')
        off = bound_tv_gibbs(PairPotential(phi, False), unit_intensity(1.0))
        # 2 * 2 int_0^0.1 (1 - z) dz
        assert off.value == pytest.approx(0.38, rel=1e-6)
        on = bound_tv_gibbs(PairPotential(phi), unit_intensity(1.0))
        assert on.value == pytest.approx(1.38, rel=1e-6)
        assert on.extra['diagonal'] == pytest.approx(1.0)

    def test_step_potential_on_square(self):
        r = 0.1
        bound = bound_tv_gibbs(
            PairPotential(parse_potential_expr('step:0.1,1,0'), False),
            unit_intensity(1.0, d=2))
        exact = math.pi * r ** 2 - 8 * r ** 3 / 3 + r ** 4 / 2
        assert bound.value == pytest.approx(2 * exact, rel=1e-6)
        assert bound.value == pytest.approx(0.05759852, abs=1e-7)

    def test_step_potential_with_step_density(self):
        # pairs within 0.1 of each other, density 1 then 2 from 0.5:
        # 0.09 with both atoms below 0.5, 4 * 0.09 with both above and
        # 2 * 0.01 across
        sigma = IntensityMeasure.parse('step:0.5,1,2', Window.unit(1))
        phi = PairPotential(parse_potential_expr('step:0.1,1,0'), False)
        bound = bound_tv_gibbs(phi, sigma)
        assert bound.value == pytest.approx(2 * 0.47, rel=1e-6)


class TestGeneralBound:
    def test_poisson_likelihood_ratio(self):
        sigma = unit_intensity(1.0)
        L = poisson_likelihood_ratio(parse_density_expr('const:2'), sigma)
        bound = bound_tv_general(L, sigma, 10000, SeedSpec(11))
        assert abs(bound.value - 1.0) <= 3 * bound.std_error
        assert not bound.warnings

    def test_gibbs_density_below_closed_form(self):
        sigma = unit_intensity(1.0)
        potential = PairPotential.constant(0.05, include_diagonal=False)
        z = constant_acceptance(0.05, 1.0, include_diagonal=False)
        bound = bound_tv_general(GibbsDensity(potential, z), sigma, 4000,
                                 SeedSpec(2))
        assert bound.value <= 0.1 + 3 * bound.std_error

    def test_unnormalized_density_warns(self):
        sigma = unit_intensity(1.0)
        L = lambda omega: 3.0
        bound = bound_tv_general(L, sigma, 100, SeedSpec(0))
        assert bound.value == 0.0
        assert bound.warnings

    def test_rho0_below_general(self):
        sigma = unit_intensity(1.0)
        L = poisson_likelihood_ratio(parse_density_expr('const:2'), sigma)
        trivial = bound_tv_rho0(L, sigma, 4000, SeedSpec(4))
        general = bound_tv_general(L, sigma, 4000, SeedSpec(4))
        assert trivial.value <= general.value + 3 * (trivial.std_error
                                                     + general.std_error)
