# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
The bounded-Lipschitz (flat) norm of a finitely supported signed measure,

    p_d(m) = max { sum_i c_i f_i : |f_i| <= 1, f_i - f_j <= d(x_i, x_j) },

a linear program over the support. Any feasible assignment extends to a
1-bounded 1-Lipschitz function on the whole space, so this is exact.

Backends:
  simplex  dense exact simplex over fractions (small supports)
  flow     exact min-cost transshipment dual via networkx.network_simplex on
           integer-scaled data; the witness comes from shortest-path potentials
  highs    scipy.optimize.linprog in double precision
  auto     simplex, then flow, by support size; highs in float mode. Exact
           runs never fall back to floats: above flow_max_atoms they stop
           with CapExceededError.
"""
from collections import namedtuple
from fractions import Fraction
from math import lcm

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.optimize import linprog

from exact.weights import FLOAT_TOLERANCE, as_weight, is_exact, weight_tolerance
from util.errors import CapExceededError, DomainError
from .simplex import simplex_max

BACKENDS = ('auto', 'simplex', 'flow', 'highs')

FlatNormResult = namedtuple('FlatNormResult', ['value', 'witness', 'backend', 'exact', 'pseudometric'])

_defaults = {'backend': 'auto', 'simplex_max_atoms': 24, 'flow_max_atoms': 2000}


def set_flat_norm_defaults(backend=None, simplex_max_atoms=None, flow_max_atoms=None):
    if backend is not None:
        if backend not in BACKENDS:
            raise ValueError(f'DUAL_NORM backend {backend} not supported')
        _defaults['backend'] = backend
    if simplex_max_atoms is not None:
        _defaults['simplex_max_atoms'] = simplex_max_atoms
    if flow_max_atoms is not None:
        _defaults['flow_max_atoms'] = flow_max_atoms


def get_flat_norm_defaults():
    return dict(_defaults)


def merged_support(m, metric):
    """(representatives, weights, members) after merging zero-distance atoms."""
    reps, weights, members, slot = [], [], [], {}
    for x, w in m.items():
        key = metric.merge_key(x)
        k = slot.get(key)
        if k is None:
            slot[key] = len(reps)
            reps.append(x)
            weights.append(w)
            members.append([x])
        else:
            weights[k] += w
            members[k].append(x)
    keep = [k for k, w in enumerate(weights) if w != 0]
    return [reps[k] for k in keep], [weights[k] for k in keep], [members[k] for k in keep]


def _simplex(c, pairs):
    # g_i = f_i + 1 in [0, 2]: rows g_i <= 2 and +-(g_i - g_j) <= d_ij
    n = len(c)
    A, b = [], []
    for i in range(n):
        row = [0] * n
        row[i] = 1
        A.append(row)
        b.append(2)
    for i, j, d in pairs:
        for s in (1, -1):
            row = [0] * n
            row[i], row[j] = s, -s
            A.append(row)
            b.append(d)
    status, value, g = simplex_max(c, A, b)
    assert status == 'optimal', "flat-norm LP is bounded and feasible"
    return value - sum(c, Fraction(0)), [x - 1 for x in g]


def _flow(c, pairs):
    L = 1
    for w in c:
        L = lcm(L, w.denominator)
    K = 1
    for _, _, d in pairs:
        K = lcm(K, d.denominator)
    G = nx.DiGraph()
    demands = [int(w * L) for w in c]
    G.add_node(0, demand=-sum(demands))
    for i, dem in enumerate(demands, 1):
        G.add_node(i, demand=dem)
        G.add_edge(0, i, weight=K)
        G.add_edge(i, 0, weight=K)
    for i, j, d in pairs:
        w = int(d * K)
        G.add_edge(i + 1, j + 1, weight=w)
        G.add_edge(j + 1, i + 1, weight=w)
    cost, flow = nx.network_simplex(G)
    # residual graph; shortest distances from the ground node are optimal potentials
    R = nx.DiGraph()
    R.add_nodes_from(G.nodes)
    for u, v, data in G.edges(data=True):
        _residual_arc(R, u, v, data['weight'])
    for u, out in flow.items():
        for v, x in out.items():
            if x > 0:
                _residual_arc(R, v, u, -G[u][v]['weight'])
    dist = nx.single_source_bellman_ford_path_length(R, 0)
    return Fraction(cost, L * K), [Fraction(dist[i], K) for i in range(1, len(c) + 1)]


def _residual_arc(R, u, v, w):
    if not R.has_edge(u, v) or R[u][v]['weight'] > w:
        R.add_edge(u, v, weight=w)


def _highs(c, pairs):
    n = len(c)
    rows, cols, vals, b = [], [], [], []
    for k, (i, j, d) in enumerate(pairs):
        for r, s in ((2 * k, 1.0), (2 * k + 1, -1.0)):
            rows.extend([r, r])
            cols.extend([i, j])
            vals.extend([s, -s])
            b.append(float(d))
    obj = -np.array([float(w) for w in c])
    if pairs:
        A = sparse.csr_matrix((vals, (rows, cols)), shape=(2 * len(pairs), n))
        res = linprog(obj, A_ub=A, b_ub=np.array(b), bounds=(-1, 1), method='highs')
    else:
        res = linprog(obj, bounds=(-1, 1), method='highs')
    if res.status != 0:
        raise RuntimeError("HiGHS failed on the flat-norm LP: {}".format(res.message))
    return -res.fun, [float(v) for v in res.x]


def choose_backend(n, backend=None):
    backend = backend or _defaults['backend']
    if backend != 'auto':
        return backend
    if not is_exact():
        return 'highs'
    if n <= _defaults['simplex_max_atoms']:
        return 'simplex'
    if n > _defaults['flow_max_atoms']:
        raise CapExceededError('exact flat-norm support', n, _defaults['flow_max_atoms'])
    return 'flow'


def flat_norm(m, metric, backend=None):
    """p_d(m) with an optimal witness {point: f(point)} on the support."""
    if backend is not None and backend not in BACKENDS:
        raise ValueError(f'DUAL_NORM backend {backend} not supported')
    points, weights, members = merged_support(m, metric)
    pseudo = metric.pseudometric
    if not points:
        return FlatNormResult(as_weight(0), {}, 'trivial', is_exact(), pseudo)
    backend = choose_backend(len(points), backend)
    pairs = metric.close_pairs(points)
    if backend == 'highs':
        value, f = _highs(weights, pairs)
        exact = False
    else:
        c = [Fraction(w) for w in weights]
        pairs = [(i, j, Fraction(d)) for i, j, d in pairs]
        if backend == 'simplex':
            value, f = _simplex(c, pairs)
        elif backend == 'flow':
            value, f = _flow(c, pairs)
        else:
            raise DomainError("unknown flat-norm backend {!r}".format(backend))
        exact = is_exact()
    witness = {}
    for group, v in zip(members, f):
        for x in group:
            witness[x] = as_weight(v)
    return FlatNormResult(as_weight(value), witness, backend, exact, pseudo)


def result_tolerance(*results):
    """Comparison slack for LP values: 0 when every result is exact, float noise otherwise."""
    if all(r.exact for r in results):
        return weight_tolerance()
    return FLOAT_TOLERANCE


def flat_norm_value(m, metric, backend=None):
    return flat_norm(m, metric, backend).value


def witness_value(m, witness):
    """sum_x m(x) f(x) for a witness; equals the optimum for an optimal witness."""
    return sum((w * witness[x] for x, w in m.items()), as_weight(0))
