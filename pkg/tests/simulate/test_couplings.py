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
from scipy import stats

from ppt.errors import ValidationError
from ppt.expressions import parse_density_expr
from ppt.metrics import rho1, rho2
from ppt.processes.couplings import (SuperpositionCoupling,
                                     TimeChangeCoupling,
                                     sample_coupled_superposition,
                                     sample_coupled_timechange)
from ppt.processes.timechange import TimeChangeSpec
from ppt.seed import Estimate, SeedSpec
from tests.test_utils import unit_intensity


class TestSuperposition:
    def setup_method(self, method):
        self.sigma = unit_intensity(1.0)

    def test_doubling(self):
        coupling = SuperpositionCoupling(self.sigma,
                                         parse_density_expr('const:2'))
        assert coupling.expected_cost() == pytest.approx(1.0)
        assert coupling.left_extra.total_mass() == 0.0
        pairs = coupling.sample_many(2000, SeedSpec(3))
        for pair in pairs[:50]:
            # the left configuration sits inside the right one
            assert pair.cost_hint == pair.right.count() - pair.left.count()
            assert pair.cost_hint == rho1(pair.left, pair.right)
        est = Estimate.from_samples([p.cost_hint for p in pairs], SeedSpec(3))
        assert est.within(1.0)
        left = np.array([p.left.count() for p in pairs])
        right = np.array([p.right.count() for p in pairs])
        assert abs(left.mean() - 1.0) < 3 * math.sqrt(1.0 / len(left))
        assert abs(right.mean() - 2.0) < 3 * math.sqrt(2.0 / len(right))

    def test_sign_change(self):
        coupling = SuperpositionCoupling(self.sigma,
                                         parse_density_expr('step:0.5,0,2'))
        assert coupling.expected_cost() == pytest.approx(1.0)
        assert coupling.common.total_mass() == pytest.approx(0.5)

    def test_margins_are_poisson_on_disjoint_boxes(self):
        # p = 1/2 + x crosses 1 at x = 1/2
        p = parse_density_expr('poly:0.5,1')
        pairs = SuperpositionCoupling(self.sigma, p).sample_many(
            2000, SeedSpec(31))
        edges = np.linspace(0.0, 1.0, 5)
        lo, hi = edges[:-1], edges[1:]
        left_means = hi - lo
        right_means = 0.5 * (hi - lo) + 0.5 * (hi ** 2 - lo ** 2)
        for side, means in (('left', left_means), ('right', right_means)):
            counts = np.array([
                np.histogram(getattr(pair, side).atoms[:, 0], edges)[0]
                for pair in pairs])
            stat = 0.0
            for k, mu in enumerate(means):
                observed = np.array([np.sum(counts[:, k] == 0),
                                     np.sum(counts[:, k] == 1),
                                     np.sum(counts[:, k] >= 2)])
                probs = stats.poisson.pmf([0, 1], mu)
                expected = len(pairs) * np.append(probs, 1.0 - probs.sum())
                stat += float(np.sum((observed - expected) ** 2 / expected))
            # three count classes in each of four boxes
            assert stats.chi2.sf(stat, 4 * 2) > 1e-3, side

    def test_mean_cost_with_mixed_sign_deviation(self):
        p = parse_density_expr('poly:0.5,1')
        coupling = SuperpositionCoupling(self.sigma, p)
        # int |x - 1/2| over [0, 1]
        assert coupling.expected_cost() == pytest.approx(0.25, abs=1e-8)
        assert coupling.left_extra.total_mass() == pytest.approx(0.125)
        assert coupling.right_extra.total_mass() == pytest.approx(0.125)
        pairs = coupling.sample_many(4000, SeedSpec(32))
        est = Estimate.from_samples([pair.cost_hint for pair in pairs],
                                    SeedSpec(32))
        assert est.within(0.25)

    def test_deterministic(self):
        p = parse_density_expr('poly:0.5,1')
        a = sample_coupled_superposition(self.sigma, p, SeedSpec(9))
        b = sample_coupled_superposition(self.sigma, p, SeedSpec(9))
        assert a.left == b.left and a.right == b.right

    def test_plain_function_needs_sup(self):
        with pytest.raises(ValidationError):
            SuperpositionCoupling(self.sigma, lambda x: 2 * np.ones(len(x)))


class TestTimeChangeCoupling:
    def test_zero_time_change(self):
        pair = sample_coupled_timechange(TimeChangeSpec.zero(10.0),
                                         SeedSpec(2))
        assert pair.cost_hint == pytest.approx(0.0, abs=1e-9)
        assert pair.left.count() == pair.right.count()

    def test_cost_below_norm(self):
        tc = TimeChangeSpec.cubic_rational(50.0)
        pairs = TimeChangeCoupling(tc).sample_many(400, SeedSpec(5))
        est = Estimate.from_samples([p.cost_hint for p in pairs], SeedSpec(5))
        assert est.mean <= 1 / math.sqrt(3) + 3 * est.std_error
        counts = np.array([p.right.count() for p in pairs])
        assert abs(counts.mean() - tc.end()) < 3 * math.sqrt(tc.end() / 400)

    def test_cost_dominates_rho2_and_keeps_order(self):
        tc = TimeChangeSpec.cubic_rational(50.0)
        for pair in TimeChangeCoupling(tc).sample_many(200, SeedSpec(33)):
            assert pair.cost_hint >= rho2(pair.left, pair.right) - 1e-9
            t = pair.left.atoms[:, 0]
            r = pair.right.atoms[:, 0]
            assert np.all(np.diff(t) >= 0) and np.all(np.diff(r) >= 0)
            # atom i of the left configuration is the preimage of atom i
            assert np.allclose(tc.v(t), r, atol=1e-9)
