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

import pytest

from ppt.concentration.isoperimetry import (
    coarea_check, empty_event_ratio, exact_ratio, isoperimetric_bounds,
    isoperimetric_ratio, isoperimetric_report, poincare_l1_check,
    stirling_bounds, surface_measure)
from ppt.configuration import Configuration
from ppt.errors import CoareaRangeError, DegenerateEventError, \
    ValidationError
from ppt.gradient import (CountEvent, count_functional, distance_functional,
                          truncated_count)
from ppt.seed import SeedSpec
from ppt.window import Window
from tests.test_utils import unit_intensity


class TestSurfaceMeasure:
    def setup_method(self, method):
        self.sigma = unit_intensity(1.0)

    def test_empty_event(self):
        est = surface_measure(CountEvent('eq', 0), self.sigma, 4000,
                              SeedSpec(1))
        assert est.exact == pytest.approx(math.exp(-1))
        assert est.within(est.exact)

    def test_ratio(self):
        A = CountEvent('le', 1)
        est = isoperimetric_ratio(A, self.sigma, 4000, SeedSpec(2))
        assert est.exact == pytest.approx(exact_ratio(A, self.sigma))
        assert est.within(est.exact)
        assert est.exact >= 1

    def test_degenerate(self):
        with pytest.raises(DegenerateEventError):
            isoperimetric_ratio(CountEvent('ge', 0), self.sigma, 100,
                                SeedSpec(0))


class TestIsoperimetricBounds:
    def test_empty_event_ratio(self):
        assert empty_event_ratio(1.0) == pytest.approx(3.163953, abs=1e-6)
        assert empty_event_ratio(1.0) == \
            pytest.approx(exact_ratio(CountEvent('eq', 0), unit_intensity()))

    def test_report_flags_factor_two(self):
        report = isoperimetric_report(1.0)
        assert report['lower'] == 1.0
        assert report['witness_over_stated'] == pytest.approx(2.0)
        assert report['factor_two_discrepancy']
        assert report['alternative_upper'] == 16.0
        assert report['witness_ratio'] <= report['alternative_upper']

    def test_bounds(self):
        lower, upper = isoperimetric_bounds(2.0)
        assert upper == pytest.approx(2.0 / (1 - math.exp(-2.0)))
        with pytest.raises(ValidationError):
            isoperimetric_bounds(0.0)

    @pytest.mark.parametrize('N', range(1, 21))
    def test_stirling(self, N):
        lower, upper = stirling_bounds(N)
        assert lower <= math.factorial(N) <= upper


class TestPoincare:
    @pytest.mark.parametrize('F', [
        count_functional(),
        truncated_count(2),
        CountEvent('eq', 0),
    ])
    def test_inequality(self, F):
        lhs, rhs = poincare_l1_check(F, unit_intensity(1.0), 2000,
                                     SeedSpec(3))
        err = math.sqrt(lhs.std_error ** 2 + rhs.std_error ** 2)
        assert lhs.mean <= rhs.mean + 3 * err

    def test_distance_functional(self):
        sigma = unit_intensity(1.0)
        F = distance_functional(Configuration([0.5], sigma.window))
        lhs, rhs = poincare_l1_check(F, sigma, 2000, SeedSpec(4))
        assert lhs.mean <= rhs.mean


class TestCoarea:
    def test_count_in_half(self):
        sigma = unit_intensity(1.0)
        F = count_functional(Window([0.0], [0.5]))
        lhs, rhs = coarea_check(F, sigma, 2000, SeedSpec(5))
        # every added point of K crosses exactly one level
        assert lhs.mean == rhs.mean
        assert lhs.within(0.5)

    def test_truncated(self):
        sigma = unit_intensity(2.0)
        lhs, rhs = coarea_check(truncated_count(1), sigma, 500, SeedSpec(6))
        assert lhs.mean == rhs.mean

    def test_range_limit(self):
        with pytest.raises(CoareaRangeError):
            coarea_check(count_functional(), unit_intensity(50.0), 50,
                         SeedSpec(0), max_thresholds=5)

    def test_integer_valued_only(self):
        with pytest.raises(ValidationError):
            coarea_check(count_functional(scale=0.5), unit_intensity(1.0),
                         50, SeedSpec(0))
