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


import numpy as np
import pytest

from ppt.errors import MarginalMismatchError, ValidationError
from ppt.transport.assignment import assignment_solve
from ppt.transport.emd import CostMatrix, emd


class TestCostMatrix:
    def test_rejects_bad_entries(self):
        with pytest.raises(ValidationError):
            CostMatrix([[-1.0]])
        with pytest.raises(ValidationError):
            CostMatrix([[np.nan]])
        assert not CostMatrix([[np.inf, 0.0]]).is_finite()

    def test_from_families(self):
        C = CostMatrix.from_families([0, 1, 2], [0, 5],
                                     lambda a, b: abs(a - b), threads=2)
        assert C.shape == (3, 2)
        assert C.entries[2, 1] == 3.0


class TestEmd:
    def test_line(self):
        plan = emd([0.5, 0.5], [0.5, 0.5], [[0.0, 1.0], [1.0, 0.0]])
        assert plan.cost == pytest.approx(0.0, abs=1e-12)
        plan = emd([1.0], [0.25, 0.75], [[2.0, 4.0]])
        assert plan.cost == pytest.approx(3.5)
        assert plan.weights.sum() == pytest.approx(1.0)

    def test_matches_assignment_on_uniform_weights(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            n = int(rng.integers(2, 8))
            C = rng.random((n, n))
            perm, cost = assignment_solve(C)
            plan = emd(np.full(n, 1.0 / n), np.full(n, 1.0 / n), C)
            assert plan.cost == pytest.approx(cost / n, abs=1e-9)
            assert plan.slackness_residual <= 1e-9

    def test_marginals_reproduced(self):
        rng = np.random.default_rng(6)
        a = rng.random(5)
        a /= a.sum()
        b = rng.random(7)
        b /= b.sum()
        plan = emd(a, b, rng.random((5, 7)))
        assert np.allclose(plan.weights.sum(axis=1), a, atol=1e-9)
        assert np.allclose(plan.weights.sum(axis=0), b, atol=1e-9)

    def test_relabelling_cells_keeps_cost(self):
        rng = np.random.default_rng(9)
        for _ in range(10):
            n, m = rng.integers(2, 7, size=2)
            a = rng.random(n)
            a /= a.sum()
            b = rng.random(m)
            b /= b.sum()
            C = rng.random((n, m))
            rp = rng.permutation(n)
            cp = rng.permutation(m)
            plan = emd(a, b, C)
            moved = emd(a[rp], b[cp], C[np.ix_(rp, cp)])
            assert moved.cost == pytest.approx(plan.cost, abs=1e-9)
            assert np.allclose(moved.weights.sum(axis=1), a[rp], atol=1e-9)

    def test_infinite_entries(self):
        inf = np.inf
        plan = emd([0.5, 0.5], [0.5, 0.5], [[0.0, inf], [inf, 1.0]])
        assert plan.cost == pytest.approx(0.5)
        plan = emd([1.0, 0.0], [0.0, 1.0], [[0.0, inf], [0.0, 0.0]])
        assert plan.cost == inf

    def test_all_infinite(self):
        plan = emd([1.0], [1.0], [[np.inf]])
        assert plan.cost == np.inf

    def test_bad_marginals(self):
        with pytest.raises(MarginalMismatchError):
            emd([0.5, 0.6], [1.0], [[1.0], [1.0]])
        with pytest.raises(ValidationError):
            emd([1.0], [1.0], [[1.0], [1.0]])

    def test_sparse_triplets(self):
        d = emd([1.0], [0.25, 0.75], [[2.0, 4.0]]).to_dict()
        assert d['shape'] == [1, 2]
        assert [t[:2] for t in d['triplets']] == [[0, 0], [0, 1]]
