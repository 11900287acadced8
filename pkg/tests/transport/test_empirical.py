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


import pytest

from ppt.configuration import Configuration
from ppt.errors import LipschitzViolationError, ValidationError
from ppt.gradient import count_functional
from ppt.processes.process import PointProcess
from ppt.seed import SeedSpec
from ppt.transport.empirical import (dual_lower_bound,
                                     estimate_rubinstein_empirical)
from ppt.window import Window
from tests.test_utils import unit_intensity


class TestEmpiricalEstimate:
    def setup_method(self, method):
        self.window = Window.unit(1)

    def c(self, *pts):
        return Configuration(list(pts), self.window)

    def test_identical_samples(self):
        samples = [self.c(0.1), self.c(), self.c(0.2, 0.3)]
        est = estimate_rubinstein_empirical(samples, list(reversed(samples)),
                                            'rho1', seed=SeedSpec(0))
        assert est.mean == 0.0
        assert est.extra['n_mu'] == 3

    def test_counts_only_after_quantization(self):
        mu = [self.c(0.1), self.c(0.2, 0.9)]
        nu = [self.c(0.3), self.c(0.4, 0.6)]
        raw = estimate_rubinstein_empirical(mu, nu, 'rho1', seed=SeedSpec(0))
        one_cell = estimate_rubinstein_empirical(mu, nu, 'rho1', cells=1,
                                                 seed=SeedSpec(0))
        assert one_cell.mean == 0.0
        assert raw.mean == 3.0

    def test_rectangular_uses_emd(self):
        mu = [self.c(), self.c(0.5)]
        nu = [self.c(0.5)]
        est = estimate_rubinstein_empirical(mu, nu, 'rho1', seed=SeedSpec(0))
        assert est.mean == pytest.approx(0.5)

    def test_rho2_count_mismatch_is_infinite(self):
        est = estimate_rubinstein_empirical([self.c(0.1)], [self.c()],
                                            'rho2', seed=SeedSpec(0))
        assert est.mean == float('inf')
        assert est.std_error == 0.0

    def test_empty_samples(self):
        with pytest.raises(ValidationError):
            estimate_rubinstein_empirical([], [self.c()])


class TestDualLowerBound:
    def test_poisson_means(self):
        sigma = unit_intensity(1.0)
        mu = PointProcess('poisson', sigma).sample_many(2000, SeedSpec(1))
        nu = PointProcess('poisson', sigma.scaled(2.0)).sample_many(
            2000, SeedSpec(2))
        est = dual_lower_bound(count_functional(), mu, nu)
        assert est.within(1.0)
        assert est.extra['mean_nu'] > est.extra['mean_mu']

    def test_lipschitz_spot_check(self):
        sigma = unit_intensity(1.0)
        samples = [Configuration([0.5], sigma.window)]
        est = dual_lower_bound(count_functional(), samples, samples, sigma,
                               n_check=50, seed=SeedSpec(0))
        assert est.mean == 0.0
        with pytest.raises(LipschitzViolationError):
            dual_lower_bound(count_functional(scale=2.0), samples, samples,
                             sigma, n_check=50, seed=SeedSpec(0))
