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
End-to-end verification scenarios for the ``verify`` experiment kind.

A scenario returns its results and a list of checks; the experiment passes
when every check passes. Monte Carlo checks are made at three standard
errors.
"""

import itertools
import logging
import math

import numpy as np

from .bounds import (bound_tv_general, bound_tv_gibbs, bound_tv_poisson,
                     bound_w2_halfline, bound_w2_timechange)
from .concentration.isoperimetry import (coarea_check, empty_event_ratio,
                                         isoperimetric_ratio,
                                         isoperimetric_report,
                                         poincare_l1_check, stirling_bounds)
from .concentration.tails import (TailQuery, centered_count_mgf,
                                  laplace_bound_lipschitz,
                                  poisson_tail_exact, tail_bound_count_sharp,
                                  tail_bound_lipschitz, tail_bound_rho_eta,
                                  tail_grid)
from .configuration import Configuration
from .errors import ValidationError
from .expressions import parse_density_expr
from .gradient import (CountEvent, count_functional, distance_functional,
                       truncated_count)
from .intensity import IntensityMeasure
from .metrics import rho1, rho1_normalized, rho2
from .processes.couplings import SuperpositionCoupling, TimeChangeCoupling
from .processes.gibbs import (GibbsDensity, PairPotential,
                              constant_acceptance)
from .processes.process import PointProcess
from .processes.poisson import poisson_likelihood_ratio
from .processes.timechange import TimeChangeSpec
from .seed import Estimate, replicate
from .transport.assignment import assignment_solve
from .transport.empirical import (dual_lower_bound,
                                  estimate_rubinstein_empirical)
from .transport.oracle import exact_oracle_discrete
from .window import Window

logger = logging.getLogger(__name__)

SIGMAS = 3.0
HALF_LINE_NORM = 1.0 / math.sqrt(3.0)


def check(name, passed, **detail):
    passed = bool(passed)
    if not passed:
        logger.warning("check %s failed: %r", name, detail)
    return {'name': name, 'passed': passed, 'detail': detail}


def brute_force_assignment(C):
    n = len(C)
    return min(sum(C[i][perm[i]] for i in range(n))
               for perm in itertools.permutations(range(n)))


def scenario_assignment(params, spec, seed):
    instances = params.integer('instances', 1000, low=1)
    max_n = params.integer('max_n', 6, low=1)
    rng = seed.rng()
    mismatches = 0
    for _ in range(instances):
        n = int(rng.integers(1, max_n + 1))
        C = rng.random((n, n))
        perm, cost = assignment_solve(C)
        if cost != brute_force_assignment(C):
            mismatches += 1
    return ([['instances', instances], ['mismatches', mismatches]],
            [check('assignment_matches_brute_force', mismatches == 0,
                   mismatches=mismatches)])


def scenario_rho2(params, spec, seed):
    pairs = params.integer('pairs', 500, low=1)
    rng = seed.rng()
    worst = 0.0
    for _ in range(pairs):
        d = int(rng.integers(1, 3))
        n = int(rng.integers(0, 7))
        window = Window.unit(d)
        a = Configuration(rng.random((n, d)), window)
        b = Configuration(rng.random((n, d)), window)
        sq = [[float(np.sum((x - y) ** 2)) for y in b.atoms] for x in a.atoms]
        brute = math.sqrt(brute_force_assignment(sq)) if n else 0.0
        worst = max(worst, abs(rho2(a, b) - brute))
    return ([['pairs', pairs], ['max_abs_error', worst]],
            [check('rho2_matches_brute_force', worst <= 1e-12, error=worst)])


def unit_poisson_pair(p_expr='const:2'):
    window = Window.unit(1)
    sigma = IntensityMeasure.constant(1.0, window)
    p = parse_density_expr(p_expr)
    return sigma, p, sigma.reweighted(p, p.sup_on(window))


def scenario_poisson_tightness(params, spec, seed):
    n = params.integer('n', spec.n_samples, low=2)
    n_empirical = params.integer('n_empirical', 200, low=2)
    sigma, p, tau = unit_poisson_pair(params.get('p', 'const:2'))
    bound = bound_tv_poisson(p, sigma)

    coupling = SuperpositionCoupling(sigma, p)
    costs = [c.cost_hint for c in coupling.sample_many(n, seed.substream(0))]
    coupled = Estimate.from_samples(costs, seed.substream(0),
                                    coupling.expected_cost())

    mu = PointProcess('poisson', sigma)
    nu = PointProcess('poisson', tau)
    dual = dual_lower_bound(count_functional(),
                            mu.sample_many(n, seed.substream(1)),
                            nu.sample_many(n, seed.substream(2)))
    samples_mu = mu.sample_many(n_empirical, seed.substream(3))
    samples_nu = nu.sample_many(n_empirical, seed.substream(4))
    primal = estimate_rubinstein_empirical(samples_mu, samples_nu, 'rho1',
                                           cells=1, seed=seed.substream(5))
    small_dual = dual_lower_bound(count_functional(), samples_mu, samples_nu)
    err = primal.std_error + small_dual.std_error
    return ([['bound', bound], ['coupling', coupled], ['dual', dual],
             ['primal', primal], ['primal_dual', small_dual]],
            [check('bound_value', abs(bound.value - 1.0) <= 1e-8,
                   value=bound.value),
             check('coupling_mean', coupled.within(bound.value, SIGMAS),
                   mean=coupled.mean, std_error=coupled.std_error),
             check('dual_witness', dual.within(bound.value, SIGMAS),
                   mean=dual.mean, std_error=dual.std_error),
             check('primal_bracket',
                   small_dual.mean - SIGMAS * err <= primal.mean
                   <= bound.value + SIGMAS * err,
                   primal=primal.mean, dual=small_dual.mean,
                   bound=bound.value, err=err)])


def scenario_oracle(params, spec, seed):
    one = exact_oracle_discrete([1.0], [2.0], params.integer('truncation', 60))
    sigma, p, tau = unit_poisson_pair()
    bound = bound_tv_poisson(p, sigma).value
    results = [['one_cell', one], ['bound', bound]]
    checks = [check('one_cell_oracle', abs(one - 1.0) <= 1e-8, value=one),
              check('one_cell_matches_bound', abs(one - bound) <= 1e-8,
                    oracle=one, bound=bound)]
    if params.get('two_cells', True):
        two = exact_oracle_discrete([1.0, 1.0], [2.0, 1.0],
                                    params.integer('truncation_two', 18))
        results.append(['two_cells', two])
        checks.append(check('two_cell_oracle', abs(two - 1.0) <= 1e-8,
                            value=two))
    return results, checks


def scenario_gibbs_bound(params, spec, seed):
    c = params.number('phi', 0.05)
    n = params.integer('n', spec.n_samples, low=2)
    n_empirical = params.integer('n_empirical', 200, low=2)
    window = Window.unit(1)
    sigma = IntensityMeasure.constant(1.0, window)
    potential = PairPotential.constant(c, include_diagonal=False)
    bound = bound_tv_gibbs(potential, sigma)

    poisson = PointProcess('poisson', sigma)
    gibbs = PointProcess('gibbs', potential, sigma)
    primal = estimate_rubinstein_empirical(
        poisson.sample_many(n_empirical, seed.substream(0)),
        gibbs.sample_many(n_empirical, seed.substream(1)), 'rho1', cells=1,
        seed=seed.substream(2))
    z = constant_acceptance(c, 1.0, include_diagonal=False)
    general = bound_tv_general(GibbsDensity(potential, z), sigma, n,
                               seed.substream(3))
    return ([['bound', bound], ['primal', primal], ['general', general]],
            [check('bound_value', abs(bound.value - 2 * c) <= 1e-12,
                   value=bound.value),
             check('primal_below_bound',
                   primal.mean <= bound.value + SIGMAS * primal.std_error,
                   primal=primal.mean, std_error=primal.std_error),
             check('general_below_bound',
                   general.value <= bound.value + SIGMAS * general.std_error,
                   general=general.value, std_error=general.std_error)])


def scenario_half_line(params, spec, seed):
    n = params.integer('n', spec.n_samples, low=2)
    tc = TimeChangeSpec.cubic_rational(params.number('horizon', 200.0))
    halfline = bound_w2_halfline(tc)
    timechange = bound_w2_timechange(tc)
    costs = [c.cost_hint for c in
             TimeChangeCoupling(tc).sample_many(n, seed)]
    coupled = Estimate.from_samples(costs, seed)
    first, second = timechange.extra['expressions'][0]
    return ([['halfline', halfline], ['timechange', timechange],
             ['coupling', coupled]],
            [check('halfline_value',
                   abs(halfline.value - HALF_LINE_NORM) <= 1e-6,
                   value=halfline.value),
             check('timechange_matches_halfline',
                   abs(timechange.value - halfline.value) <= 1e-6,
                   timechange=timechange.value, halfline=halfline.value),
             check('expressions_agree',
                   abs(first - second) <= 1e-6 * max(first, second),
                   first=first, second=second),
             check('coupling_below_bound',
                   coupled.mean <= halfline.value
                   + SIGMAS * coupled.std_error,
                   mean=coupled.mean, std_error=coupled.std_error)])


def scenario_general_bound(params, spec, seed):
    n = params.integer('n', spec.n_samples, low=2)
    sigma, p, tau = unit_poisson_pair(params.get('p', 'const:2'))
    exact = bound_tv_poisson(p, sigma)
    general = bound_tv_general(poisson_likelihood_ratio(p, sigma), sigma, n,
                               seed)
    return ([['general', general], ['poisson', exact]],
            [check('general_matches_poisson',
                   abs(general.value - exact.value)
                   <= SIGMAS * general.std_error,
                   general=general.value, std_error=general.std_error,
                   poisson=exact.value),
             check('normalization', not general.warnings,
                   warnings=general.warnings)])


def scenario_tail_grid(params, spec, seed):
    rows = tail_grid(params.get('masses', [0.5, 1, 2, 5]),
                     params.get('rs', [0.5, 1, 2, 5, 10]))
    dominated = all(r['exact'] <= r['bound_sharp'] and
                    r['exact'] <= r['bound_lipschitz'] for r in rows)
    sharper = all(r['bound_sharp'] < r['bound_lipschitz']
                  for r in rows if r['r'] >= 3 * r['mass'])
    rho_eta = all(tail_bound_rho_eta(r['mass'], r['r']) >= r['exact']
                  for r in rows)
    q = TailQuery(1, 1)
    lip = tail_bound_lipschitz(q)
    sharp = tail_bound_count_sharp(q)
    return ([['grid', rows], ['lipschitz_1_1', lip], ['sharp_1_1', sharp]],
            [check('exact_dominated', dominated),
             check('sharp_beats_lipschitz_far_out', sharper),
             check('rho_eta_dominates', rho_eta),
             check('lipschitz_spot', abs(lip - math.e / 4) <= 1e-6, value=lip),
             check('sharp_spot',
                   abs(sharp - (math.e / 2) / math.sqrt(4 * math.pi)) <= 1e-6,
                   value=sharp),
             check('spot_exact', abs(poisson_tail_exact(1, 2)
                                     - (1 - 2 / math.e)) <= 1e-12)])


def scenario_laplace_sharpness(params, spec, seed):
    mass = params.number('mass', 1.0)
    lams = params.get('lambdas', [0.1, 0.5, 1.0])
    rows = []
    for lam in lams:
        exact = centered_count_mgf(lam, mass)
        bound = laplace_bound_lipschitz(lam, mass)
        rows.append({'lambda': lam, 'exact': exact, 'bound': bound})
    sharp = all(abs(r['exact'] - r['bound']) <= 1e-12 * r['bound']
                for r in rows)

    n = params.integer('n', spec.n_samples, low=2)
    sigma = IntensityMeasure.constant(mass, Window.unit(1))
    F = truncated_count(10)
    process = PointProcess('poisson', sigma)
    values = np.array([F(w) for w in process.sample_many(n, seed)],
                      dtype=float)
    lam = 0.5
    mgf = Estimate.from_samples(np.exp(lam * (values - values.mean())), seed)
    bound = laplace_bound_lipschitz(lam, mass)
    return ([['mgf', rows], ['truncated_mgf', mgf]],
            [check('count_mgf_equals_bound', sharp),
             check('truncated_below_bound',
                   mgf.mean <= bound + SIGMAS * mgf.std_error,
                   mean=mgf.mean, bound=bound)])


def scenario_stirling(params, spec, seed):
    top = params.integer('max_n', 20, low=1)
    failures = []
    for N in range(1, top + 1):
        lower, upper = stirling_bounds(N)
        if not lower <= math.factorial(N) <= upper:
            failures.append(N)
    return ([['max_n', top], ['failures', failures]],
            [check('factorial_contained', not failures, failures=failures)])


def scenario_poincare_coarea(params, spec, seed):
    n = params.integer('n', spec.n_samples, low=2)
    window = Window.unit(1)
    sigma = IntensityMeasure.constant(1.0, window)
    half = Window([0.0], [0.5])
    eta = Configuration([0.5], window)
    suite = [('count', count_functional()),
             ('truncated_count', truncated_count(3)),
             ('distance', distance_functional(eta, 'rho1')),
             ('indicator', CountEvent('eq', 0))]
    results = []
    checks = []
    for i, (name, F) in enumerate(suite):
        lhs, rhs = poincare_l1_check(F, sigma, n, seed.substream(i))
        err = math.sqrt(lhs.std_error ** 2 + rhs.std_error ** 2)
        results.append(['poincare_' + name, {'lhs': lhs, 'rhs': rhs}])
        checks.append(check('poincare_' + name,
                            lhs.mean <= rhs.mean + SIGMAS * err,
                            lhs=lhs.mean, rhs=rhs.mean))
    for i, (name, F) in enumerate([('count', count_functional(half)),
                                   ('truncated', truncated_count(3, half))]):
        lhs, rhs = coarea_check(F, sigma, n, seed.substream(10 + i))
        err = math.sqrt(lhs.std_error ** 2 + rhs.std_error ** 2)
        results.append(['coarea_' + name, {'lhs': lhs, 'rhs': rhs}])
        checks.append(check('coarea_' + name,
                            abs(lhs.mean - rhs.mean) <= SIGMAS * err + 1e-12,
                            lhs=lhs.mean, rhs=rhs.mean))
        if name == 'count':
            checks.append(check('coarea_count_mass',
                                lhs.within(0.5, SIGMAS), lhs=lhs.mean))
    return results, checks


def scenario_isoperimetry(params, spec, seed):
    n = params.integer('n', spec.n_samples, low=2)
    mass = params.number('mass', 1.0)
    sigma = IntensityMeasure.constant(mass, Window.unit(1))
    report = isoperimetric_report(mass)
    events = [CountEvent('eq', 0), CountEvent('le', 1), CountEvent('le', 2),
              CountEvent('le', 3), CountEvent('ge', 1, Window([0.0], [0.5]))]
    results = [['report', report]]
    ratios_ok = True
    for i, event in enumerate(events):
        est = isoperimetric_ratio(event, sigma, n, seed.substream(i))
        results.append([event.describe(), est])
        ratios_ok = ratios_ok and est.mean >= 1 - SIGMAS * est.std_error \
            and est.exact >= 1
    exact = empty_event_ratio(mass)
    target = 2 * mass / -math.expm1(-mass)
    return (results,
            [check('empty_event_ratio', abs(exact - target) <= 1e-9,
                   value=exact),
             check('ratios_above_one', ratios_ok),
             check('discrepancy_flagged', report['factor_two_discrepancy'])])


def scenario_semicontinuity(params, spec, seed):
    top = params.integer('max_n', 10, low=2)
    window = Window([-1.0], [top + 1.0])
    K = Window([-0.5], [1.5])
    omega = Configuration([0.0], window)
    eta = Configuration([1.0], window)
    limit_tv = rho1_normalized(omega, eta)
    seq_tv = [rho1_normalized(Configuration([0.0, k], window),
                              Configuration([1.0, k], window))
              for k in range(2, top + 1)]
    limit_rho1 = rho1(omega.restrict(K), eta.restrict(K))
    seq_rho1 = [rho1(Configuration([0.0, k], window).restrict(K),
                     Configuration([1.0, k], window).restrict(K))
                for k in range(2, top + 1)]
    return ([['normalized_limit', limit_tv], ['normalized_sequence', seq_tv],
             ['rho1_limit', limit_rho1], ['rho1_sequence', seq_rho1]],
            [check('normalized_counterexample',
                   limit_tv == 2 and all(v == 1 for v in seq_tv)),
             check('rho1_liminf', min(seq_rho1) >= limit_rho1)])


SCENARIOS = {
    'assignment': scenario_assignment,
    'rho2': scenario_rho2,
    'poisson-tightness': scenario_poisson_tightness,
    'oracle': scenario_oracle,
    'gibbs-bound': scenario_gibbs_bound,
    'half-line': scenario_half_line,
    'general-bound': scenario_general_bound,
    'tail-grid': scenario_tail_grid,
    'laplace-sharpness': scenario_laplace_sharpness,
    'stirling': scenario_stirling,
    'poincare-coarea': scenario_poincare_coarea,
    'isoperimetry': scenario_isoperimetry,
    'semicontinuity': scenario_semicontinuity,
}


def run_scenario(name, params, spec, seed):
    """
    :returns: (results, checks)
    """
    if name not in SCENARIOS:
        raise ValidationError("unknown scenario %r; expected one of %s"
                              % (name, ", ".join(sorted(SCENARIOS))),
                              params.sub('scenario'))
    logger.info("running scenario %s", name)
    return SCENARIOS[name](params, spec, seed)
