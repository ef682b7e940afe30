# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Iterated averaging pi_mu f = lim_n Phi_{mu^n} f, evaluated on a finite point
set, and the Poisson product f1 ._mu f2 = pi_mu(f1 f2).

Convergence at a point is declared after three consecutive differences below
`tol`; the pruning deficiency of the powers is reported next to it, since
both bound the distance to the true limit.
"""
from collections import namedtuple

from exact.weights import as_weight, weight_tolerance
from measures.convolution import iter_convolution_powers
from .functions import product
from .transfer import transfer_on_group

PiResult = namedtuple('PiResult', ['rows', 'converged_at', 'last'])

CONVERGENCE_RUN = 3


def iter_pi(mu, f, points, n_max, tol, group, threshold=0, emit=None, num_workers=1):
    """Yield (n, rows) for n = 1..n_max; rows are recorded only where emit(n) holds.

    Each row: point, n, value Phi_{mu^n} f, Cesaro average of the values so
    far, pruned mass, and the n at which convergence was first declared.
    """
    tol = as_weight(tol)
    state = {g: {'prev': None, 'run': 0, 'sum': as_weight(0), 'converged': None} for g in points}
    for step in iter_convolution_powers(mu, group, n_max, threshold, num_workers=num_workers):
        rows = []
        for g in points:
            st = state[g]
            value = transfer_on_group(step.measure, f, g, group)
            if st['prev'] is not None and abs(value - st['prev']) < tol:
                st['run'] += 1
            else:
                st['run'] = 0
            if st['converged'] is None and st['run'] >= CONVERGENCE_RUN:
                st['converged'] = step.n
            st['prev'] = value
            st['sum'] += value
            if emit is None or emit(step.n):
                rows.append({'n': step.n, 'point': g, 'value': value, 'cesaro': st['sum'] / step.n,
                             'pruned': step.pruned, 'converged_at': st['converged']})
        yield step.n, rows, state


def iterate_pi(mu, f, points, n_max, tol, group, threshold=0, emit=None, num_workers=1):
    all_rows, state = [], {}
    for _, rows, state in iter_pi(mu, f, points, n_max, tol, group, threshold, emit, num_workers):
        all_rows.extend(rows)
    return PiResult(all_rows, {g: st['converged'] for g, st in state.items()},
                    {g: st['prev'] for g, st in state.items()})


def poisson_product(mu, f1, f2, points, n_max, tol, group, threshold=0, emit=None, num_workers=1):
    return iterate_pi(mu, product(f1, f2), points, n_max, tol, group, threshold, emit, num_workers)


def monotone_square_check(mu, h, points, n_max, group, tol=None, threshold=0):
    """Phi_{mu^n}(h^2) should be non-decreasing in n at every point when h is harmonic."""
    tol = weight_tolerance() if tol is None else as_weight(tol)
    result = iterate_pi(mu, product(h, h), points, n_max, 0, group, threshold)
    report = []
    for g in points:
        values = [r['value'] for r in result.rows if r['point'] == g]
        ok = all(b >= a - tol for a, b in zip(values, values[1:]))
        report.append({'point': g, 'values': values, 'non_decreasing': ok})
    return {'rows': report, 'ok': all(r['non_decreasing'] for r in report)}
