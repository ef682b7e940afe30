# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Invariance deficiencies p_d(g mu - mu) and their profiles along convolution
powers. A profile that decays toward 0 for every g in the test set is
evidence of asymptotic invariance; a positive floor is counter-evidence.
"""
from concurrent.futures import ThreadPoolExecutor

from exact.weights import FLOAT_TOLERANCE, as_weight, get_weight_mode
from measures.convolution import iter_convolution_powers, signed_convolve, translate, right_translate
from measures.measure import FinMeasure
from .flat_norm import flat_norm, result_tolerance


def deficiency_result(mu, g, metric, group, backend=None):
    return flat_norm(translate(g, mu, group).as_signed() - mu, metric, backend)


def deficiency(mu, g, metric, group, backend=None):
    """p_d(g mu - mu)."""
    return deficiency_result(mu, g, metric, group, backend).value


def deficiencies(mu, elements, metric, group, backend=None, num_workers=1):
    """FlatNormResults for each g, in input order."""
    if num_workers > 1 and len(elements) > 1:
        with ThreadPoolExecutor(max_workers=num_workers) as pool:
            return list(pool.map(lambda g: deficiency_result(mu, g, metric, group, backend), elements))
    return [deficiency_result(mu, g, metric, group, backend) for g in elements]


class DeficiencyProfile(object):
    """Rows (n, g, value, pruned, backend, exact) plus the run's metric and mode."""

    def __init__(self, metric, elements, cesaro=False):
        self.metric_kind = metric.kind
        self.pseudometric = metric.pseudometric
        self.elements = list(elements)
        self.cesaro = cesaro
        self.weight_mode = get_weight_mode()
        self.rows = []

    def add(self, n, g, result, pruned):
        self.rows.append({'n': n, 'g': g, 'value': result.value, 'pruned': pruned,
                          'backend': result.backend, 'exact': result.exact})

    def series(self, g):
        return [(r['n'], r['value']) for r in self.rows if r['g'] == g]

    def max_by_n(self):
        out = {}
        for r in self.rows:
            out[r['n']] = max(out.get(r['n'], r['value']), r['value'])
        return sorted(out.items())

    def monotone(self, g):
        """True when the series for g never increases (beyond float tolerance
        if any value came from a double-precision backend)."""
        rows = [r for r in self.rows if r['g'] == g]
        tol = 0 if all(r['exact'] for r in rows) else FLOAT_TOLERANCE
        values = [r['value'] for r in rows]
        return all(b <= a + tol for a, b in zip(values, values[1:]))

    def monotone_report(self):
        return [{'g': g, 'non_increasing': self.monotone(g)} for g in self.elements]


def iter_deficiency_profile(mu, elements, n_max, metric, group, threshold=0, cesaro=False, emit=None,
                            backend=None, num_workers=1, profile=None):
    """Fill `profile` one power at a time; yields (n, [results]) after each emitted n."""
    if profile is None:
        profile = DeficiencyProfile(metric, elements, cesaro)
    running, count = {}, 0
    power_emit = None if cesaro else emit
    for step in iter_convolution_powers(mu, group, n_max, threshold, emit=power_emit, num_workers=num_workers):
        nu = step.measure
        pruned = step.pruned
        if cesaro:
            count += 1
            for x, w in nu.items():
                running[x] = running.get(x, 0) + w
            if emit is not None and not emit(step.n):
                continue
            scale = as_weight(1) / count
            nu = FinMeasure._trusted({x: w * scale for x, w in running.items() if w != 0})
        results = deficiencies(nu, elements, metric, group, backend, num_workers)
        for g, res in zip(elements, results):
            profile.add(step.n, g, res, pruned)
        yield step.n, results


def deficiency_profile(mu, elements, n_max, metric, group, threshold=0, cesaro=False, emit=None,
                       backend=None, num_workers=1):
    profile = DeficiencyProfile(metric, elements, cesaro)
    for _ in iter_deficiency_profile(mu, elements, n_max, metric, group, threshold, cesaro, emit,
                                     backend, num_workers, profile):
        pass
    return profile


def contraction_check(m, nu, metric, group, backend=None):
    """p_d(m nu) <= p_d(m); exact comparison in exact mode."""
    lhs = flat_norm(signed_convolve(m, nu, group), metric, backend)
    rhs = flat_norm(m, metric, backend)
    tol = result_tolerance(lhs, rhs)
    return {'lhs': lhs.value, 'rhs': rhs.value, 'holds': lhs.value <= rhs.value + tol}


def right_invariance_check(mu, g, r, metric, group, backend=None):
    """Deficiency of mu and of mu right-translated by r agree for right-invariant d."""
    before = deficiency_result(mu, g, metric, group, backend)
    after = deficiency_result(right_translate(mu, r, group), g, metric, group, backend)
    tol = result_tolerance(before, after)
    return {'before': before.value, 'after': after.value, 'equal': abs(before.value - after.value) <= tol}
