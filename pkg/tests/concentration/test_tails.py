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


import csv
import math

import pytest
from scipy import stats

from ppt.concentration.tails import (
    TailQuery, centered_count_mgf, check_disjoint, laplace_bound_lipschitz,
    poisson_tail_exact, rho_eta_tail_exact, rho_eta_tail_mc,
    tail_bound_count_pmf, tail_bound_count_sharp, tail_bound_lipschitz,
    tail_bound_rho_eta, tail_bound_rho_eta_factorial, tail_grid,
    upper_int_part, write_tail_grid_csv)
from ppt.configuration import Configuration
from ppt.errors import SharedAtomError, ValidationError
from ppt.intensity import IntensityMeasure
from ppt.metrics import quantize
from ppt.processes.process import PointProcess
from ppt.seed import SeedSpec
from ppt.window import Window
from tests.test_utils import unit_intensity

MASSES = [0.5, 1, 2, 5]
RS = [0.5, 1, 2, 5, 10]


class TestTailQuery:
    def test_upper_int_part(self):
        assert upper_int_part(2.0) == 2
        assert upper_int_part(2.1) == 3
        assert upper_int_part(0.3) == 1
        with pytest.raises(ValidationError):
            upper_int_part(0.0)

    def test_validation(self):
        with pytest.raises(ValidationError):
            TailQuery(0.0, 1.0)
        with pytest.raises(ValidationError):
            TailQuery(1.0, -1.0)
        assert TailQuery(1.5, 1.0).level() == 3


class TestSpotValues:
    def setup_method(self, method):
        self.q = TailQuery(1, 1)

    def test_lipschitz(self):
        assert tail_bound_lipschitz(self.q) == pytest.approx(math.e / 4,
                                                             abs=1e-12)
        assert tail_bound_lipschitz(self.q) == pytest.approx(0.679570,
                                                             abs=1e-6)

    def test_sharp(self):
        value = tail_bound_count_sharp(self.q)
        assert value == pytest.approx((math.e / 2) / math.sqrt(4 * math.pi),
                                      abs=1e-12)
        assert value == pytest.approx(0.383406, abs=1e-6)

    def test_exact(self):
        assert poisson_tail_exact(1, 2) == pytest.approx(1 - 2 / math.e,
                                                         abs=1e-12)
        assert poisson_tail_exact(1, 0) == 1.0

    def test_rho_eta(self):
        assert tail_bound_rho_eta(1, 1) == pytest.approx(0.5223, abs=1e-4)


class TestLaplace:
    @pytest.mark.parametrize('lam', [0.1, 0.5, 1.0, 2.0])
    @pytest.mark.parametrize('mass', [0.5, 1.0, 4.0])
    def test_count_is_extremal(self, lam, mass):
        assert centered_count_mgf(lam, mass) == \
            pytest.approx(laplace_bound_lipschitz(lam, mass), rel=1e-12)

    def test_invalid(self):
        with pytest.raises(ValidationError):
            laplace_bound_lipschitz(0.0, 1.0)


class TestGrid:
    def setup_method(self, method):
        self.rows = tail_grid(MASSES, RS)

    def test_exact_dominated(self):
        for row in self.rows:
            q = TailQuery(row['mass'], row['r'])
            assert row['exact'] <= tail_bound_count_pmf(q) <= \
                row['bound_sharp']
            assert row['exact'] <= row['bound_lipschitz']

    def test_sharp_wins_far_out(self):
        far = [r for r in self.rows if r['r'] >= 3 * r['mass']]
        assert far
        for row in far:
            assert row['bound_sharp'] < row['bound_lipschitz']

    def test_rho_eta_dominates(self):
        for row in self.rows:
            m, r = row['mass'], row['r']
            assert tail_bound_rho_eta(m, r) >= row['exact']
            assert tail_bound_rho_eta_factorial(m, r) >= row['exact']

    def test_exact_matches_scipy(self):
        for row in self.rows:
            k = upper_int_part(row['mass'] + row['r'])
            assert row['exact'] == pytest.approx(
                stats.poisson.sf(k - 1, row['mass']), rel=1e-9)

    def test_csv(self, tmp_path):
        path = str(tmp_path / 'grid.csv')
        write_tail_grid_csv(path, self.rows)
        with open(path, newline='') as f:
            raw = f.read()
        assert raw.startswith('mass,r,exact,bound_lipschitz,bound_sharp\r\n')
        with open(path, newline='') as f:
            back = list(csv.DictReader(f))
        assert len(back) == len(self.rows)
        assert float(back[0]['exact']) == self.rows[0]['exact']


class TestRhoEtaTail:
    def setup_method(self, method):
        self.sigma = unit_intensity(2.0)
        self.eta = Configuration([0.25, 0.75], self.sigma.window)

    def test_exact_is_count_tail(self):
        value = rho_eta_tail_exact(self.sigma, self.eta, 1.5, 50, SeedSpec(0))
        assert value == pytest.approx(poisson_tail_exact(2.0, 4))

    def test_monte_carlo(self):
        est = rho_eta_tail_mc(self.sigma, self.eta, 1.0, 3000, SeedSpec(1))
        assert est.within(est.exact)
        assert est.exact <= tail_bound_rho_eta(2.0, 1.0)

    def test_shared_atoms(self):
        # quantized samples sit on cell centres
        window = Window.unit(1)
        sigma = IntensityMeasure.constant(5.0, window)
        eta = Configuration([0.5], window)
        samples = [quantize(w, 1) for w in
                   PointProcess('poisson', sigma).sample_many(5, SeedSpec(0))]
        with pytest.raises(SharedAtomError):
            check_disjoint(samples, eta)
