# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Convolution on a group: (mu nu)(B) is the mass of {(x, y) : xy in B}.

Supports are split into contiguous chunks that may be processed by a worker
pool; partial atom maps are merged in chunk order, so the result (values and
atom order) does not depend on the number of workers.
"""
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import lcm

from exact.weights import as_weight, is_exact
from util.errors import DomainError, CapExceededError
from .measure import FinMeasure, SignedFinMeasure, mixture

PowerStep = namedtuple('PowerStep', ['n', 'measure', 'pruned', 'support_size'])


def _chunks(seq, k):
    k = max(1, min(k, len(seq)))
    size, extra = divmod(len(seq), k)
    out, start = [], 0
    for i in range(k):
        stop = start + size + (1 if i < extra else 0)
        out.append(seq[start:stop])
        start = stop
    return out


def _partial_products(chunk, right, mul):
    out = {}
    for x, a in chunk:
        for s, b in right:
            y = mul(x, s)
            out[y] = out.get(y, 0) + a * b
    return out


def _product_map(left, right, mul, num_workers=1):
    if num_workers > 1 and len(left) > 1:
        with ThreadPoolExecutor(max_workers=num_workers) as pool:
            partials = list(pool.map(lambda c: _partial_products(c, right, mul), _chunks(left, num_workers)))
    else:
        partials = [_partial_products(left, right, mul)]
    merged = partials[0]
    for p in partials[1:]:
        for y, w in p.items():
            merged[y] = merged.get(y, 0) + w
    return merged


def convolve(mu, nu, group, num_workers=1):
    merged = _product_map(list(mu.items()), list(nu.items()), group.mul, num_workers)
    return FinMeasure._trusted({y: w for y, w in merged.items() if w != 0})


def signed_convolve(m, nu, group, num_workers=1):
    """m * nu for a signed m, by bilinearity."""
    merged = _product_map(list(m.items()), list(nu.items()), group.mul, num_workers)
    return SignedFinMeasure._trusted({y: w for y, w in merged.items() if w != 0})


def _prune(cur, keep):
    return {x: a for x, a in cur.items() if keep(a)}


def iter_convolution_powers(mu, group, n_max, threshold=0, emit=None, support_cap=None, num_workers=1):
    """Yield PowerStep(n, mu^n, pruned, support_size) for n = 1..n_max.

    After each step atoms lighter than `threshold` are dropped without
    renormalizing; `pruned` is the exact mass removed relative to the unpruned
    power, so |mu^n_pruned(f) - mu^n(f)| <= pruned * sup|f|. Only steps with
    emit(n) true are materialized. CapExceededError (level = n) is raised once
    the support exceeds `support_cap`.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1, got {}".format(n_max))
    threshold = as_weight(threshold)
    if is_exact():
        # integer numerators over the common denominator den^n
        den = 1
        for w in mu.atoms.values():
            den = lcm(den, w.denominator)
        step = [(s, w.numerator * (den // w.denominator)) for s, w in mu.items()]
        base = sum(a for _, a in step)
        tn, td = threshold.numerator, threshold.denominator
        scale = 1
        cur = {}
        for n in range(1, n_max + 1):
            if n == 1:
                cur = dict(step)
            else:
                cur = _product_map(list(cur.items()), step, group.mul, num_workers)
            scale *= den
            if tn > 0:
                cur = _prune(cur, lambda a: a * td >= tn * scale)
            if support_cap is not None and len(cur) > support_cap:
                raise CapExceededError('convolution support', len(cur), support_cap, level=n)
            if emit is None or emit(n):
                pruned = Fraction(base ** n - sum(cur.values()), scale)
                measure = FinMeasure._trusted({x: Fraction(a, scale) for x, a in cur.items()})
                yield PowerStep(n, measure, pruned, len(cur))
    else:
        step = list(mu.items())
        base = sum(w for _, w in step)
        cur = {}
        for n in range(1, n_max + 1):
            cur = dict(step) if n == 1 else _product_map(list(cur.items()), step, group.mul, num_workers)
            if threshold > 0:
                cur = _prune(cur, lambda a: a >= threshold)
            if support_cap is not None and len(cur) > support_cap:
                raise CapExceededError('convolution support', len(cur), support_cap, level=n)
            if emit is None or emit(n):
                pruned = max(0.0, base ** n - sum(cur.values()))
                yield PowerStep(n, FinMeasure._trusted(dict(cur)), pruned, len(cur))


def convolution_power(mu, n, group, threshold=0, num_workers=1):
    last = None
    for last in iter_convolution_powers(mu, group, n, threshold, emit=lambda k: k == n, num_workers=num_workers):
        pass
    return last.measure


def cesaro_average(powers):
    """(1/n) sum_k mu^k over the given list of powers."""
    if not powers:
        raise DomainError("Cesaro average of an empty sequence")
    w = as_weight(1) / len(powers)
    return mixture([w] * len(powers), powers)


def pushforward_inverse(mu, group):
    return mu.map(group.inv)


def translate(g, mu, group):
    """g mu = delta_g mu: every atom x moves to g x."""
    return mu.map(lambda x: group.mul(g, x))


def right_translate(mu, r, group):
    return mu.map(lambda x: group.mul(x, r))


def nondegeneracy_probe(mu, group, depth, targets=()):
    """BFS over products of support elements of length <= depth.

    `truncated` is set when the search stopped with new elements still
    appearing, so unreached targets are inconclusive.
    """
    support = list(mu.atoms)
    reached = dict.fromkeys(support, 1)
    frontier = list(support)
    for k in range(2, depth + 1):
        nxt = []
        for x in frontier:
            for s in support:
                y = group.mul(x, s)
                if y not in reached:
                    reached[y] = k
                    nxt.append(y)
        frontier = nxt
        if not frontier:
            break
    truncated = bool(frontier) and any(group.mul(x, s) not in reached for x in frontier for s in support)
    return {
        'depth': depth,
        'reached': len(reached),
        'targets': [{'element': group.format_element(t), 'reached': t in reached,
                     'length': reached.get(t)} for t in targets],
        'truncated': truncated,
        'elements': reached,
    }
