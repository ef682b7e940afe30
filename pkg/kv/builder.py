# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Recursive construction of a measure whose convolution powers become
asymptotically invariant.

Level m absorbs E_m = S_m u (spt alpha_{m-1})^{n_m}: alpha_m is eps = 1/m
invariant under every g in E_m and contains E_m in its support. The result
mu = sum_{m <= M} tau_m alpha_m is truncated; its missing mass (the tail of
the weights) is carried as deficiency and enters every checked bound as
the slack 2 * tail * n.
"""
from collections import namedtuple
from fractions import Fraction
from itertools import product

from dualnorm.deficiency import deficiencies, deficiency_profile
from exact.weights import as_weight, weight_tolerance
from harmonic.montecarlo import StepSampler
from measures.convolution import convolve, iter_convolution_powers
from measures.measure import mixture
from util.errors import CapExceededError
from .oracle import build_oracle
from .schedule import build_schedule

KVLevel = namedtuple('KVLevel', ['m', 'tau', 'n', 'eps', 'requirement', 'alpha', 'info'])


def product_set(support, n, group, cap=100000, level=None):
    """All products s_1 ... s_n with s_i in `support`, in first-seen order."""
    current = list(dict.fromkeys(support))
    base = list(current)
    for _ in range(n - 1):
        nxt = {}
        for x in current:
            for s in base:
                nxt[group.mul(x, s)] = None
                if len(nxt) > cap:
                    raise CapExceededError('product set', len(nxt), cap, level)
        current = list(nxt)
    if len(current) > cap:
        raise CapExceededError('product set', len(current), cap, level)
    return current


class KVResult(object):

    def __init__(self, schedule, levels, mu, group):
        self.schedule = schedule
        self.levels = levels
        self.mu = mu
        self.group = group
        self.conditions = None

    @property
    def alphas(self):
        return [lv.alpha for lv in self.levels]

    @property
    def tail(self):
        return self.schedule.tail

    def slack(self, n):
        return 2 * self.tail * n

    def sampler(self):
        return StepSampler(self.mu)

    def level_rows(self):
        rows = []
        for lv in self.levels:
            cond = self.conditions[lv.m] if self.conditions else {}
            rows.append({'m': lv.m, 'tau': lv.tau, 'n_m': lv.n, 'eps': lv.eps, 'requirement_size': len(lv.requirement),
                         'support_size': len(lv.alpha), 'max_deficiency': cond.get('max_deficiency'),
                         'condition_i': cond.get('condition_i'), 'condition_ii': cond.get('condition_ii'),
                         'side': lv.info.get('side')})
        return rows


def kv_build(schedule, oracle, group, product_cap=100000):
    levels = []
    for m in range(schedule.depth + 1):
        if m == 0:
            n, eps = None, Fraction(1)
            requirement = list(schedule.chain[0])
        else:
            n, eps = schedule.nm(m), Fraction(1, m)
            prev = levels[-1].alpha
            requirement = list(dict.fromkeys(list(schedule.chain[m]) +
                                             product_set(prev.support, n, group, product_cap, level=m)))
        alpha, info = oracle(eps, requirement, level=m)
        levels.append(KVLevel(m, schedule.taus[m], n, eps, requirement, alpha, info))
    mu = mixture([as_weight(t) for t in schedule.taus], [lv.alpha for lv in levels])
    result = KVResult(schedule, levels, mu, group)
    verify_conditions(result)
    return result


def verify_conditions(result, backend=None, num_workers=1):
    """Re-check (i) p_d(g alpha_m - alpha_m) < 1/m on E_m and (ii) E_m inside spt alpha_m."""
    metric = result.schedule.metric
    conditions = {}
    for lv in result.levels:
        moving = [g for g in lv.requirement if g != result.group.identity()]
        values = [r.value for r in deficiencies(lv.alpha, moving, metric, result.group, backend, num_workers)]
        worst = max(values, default=as_weight(0))
        conditions[lv.m] = {
            'max_deficiency': worst,
            'condition_i': lv.m == 0 or worst < lv.eps,
            'condition_ii': all(g in lv.alpha for g in lv.requirement),
        }
    result.conditions = conditions
    return conditions


def _claim1(result, m, n, backend, num_workers, max_tuples):
    metric, group = result.schedule.metric, result.group
    bound = Fraction(2, m)
    rows = []
    ks = (k for k in product(range(result.schedule.depth + 1), repeat=n) if max(k) >= m)
    for count, k in enumerate(ks):
        if count >= max_tuples:
            break
        theta = result.levels[k[0]].alpha
        for i in k[1:]:
            theta = convolve(theta, result.levels[i].alpha, group, num_workers)
        elements = result.schedule.chain[m - 1]
        for g, r in zip(elements, deficiencies(theta, elements, metric, group, backend, num_workers)):
            rows.append({'m': m, 'tuple': list(k), 'g': g, 'value': r.value, 'bound': bound,
                         'holds': r.value <= bound + weight_tolerance()})
    return rows


def verify_claims(result, m_list, profile_n=20, profile_elements=None, claim1=True, claim1_max_tuples=64,
                  backend=None, num_workers=1):
    """Bounds for the truncated mu.

    claim 1: p_d(g theta - theta) <= 2/m for theta = alpha_k1 ... alpha_kn with some k_i >= m
    claim 2: p_d(g mu^{n_m} - mu^{n_m}) < 4/m + 2 tail n_m for g in S_{m-1}
    claim 3: n -> p_d(g mu^n - mu^n) is non-increasing
    """
    metric, group = result.schedule.metric, result.group
    report = {'claim1': [], 'claim2': [], 'claim3': None, 'tail': result.tail}
    for m in m_list:
        if not 1 <= m <= result.schedule.depth:
            continue
        n = result.schedule.nm(m)
        if claim1:
            report['claim1'].extend(_claim1(result, m, n, backend, num_workers, claim1_max_tuples))
        power = None
        for step in iter_convolution_powers(result.mu, group, n, emit=lambda k: k == n, num_workers=num_workers):
            power = step.measure
        bound = Fraction(4, m) + result.slack(n)
        elements = result.schedule.chain[m - 1]
        for g, r in zip(elements, deficiencies(power, elements, metric, group, backend, num_workers)):
            report['claim2'].append({'m': m, 'n_m': n, 'g': g, 'value': r.value, 'bound': bound,
                                     'slack': result.slack(n), 'holds': r.value < bound})
    if profile_n:
        if profile_elements is None:
            profile_elements = [g for _, g in group.generators()]
        profile = deficiency_profile(result.mu, profile_elements, profile_n, metric, group, backend=backend,
                                     num_workers=num_workers)
        report['claim3'] = {'rows': profile.rows, 'monotone': profile.monotone_report(),
                            'form': 'truncated mu, deficiency kept (not renormalized)'}
    checks = [r['holds'] for r in report['claim1'] + report['claim2']]
    if report['claim3'] is not None:
        checks.extend(r['non_increasing'] for r in report['claim3']['monotone'])
    report['ok'] = all(checks)
    return report


def build_kv(config, group, metric, num_workers=1):
    schedule = build_schedule(config.KV, group, metric)
    oracle = build_oracle(config.KV, group, metric, num_workers=num_workers)
    return kv_build(schedule, oracle, group, config.NUMERIC.product_cap)
