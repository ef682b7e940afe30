# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Brute-force reference for the flat norm on tiny supports.

The LP dual is an uncapacitated transshipment problem on the support plus a
ground node (ground arcs cost 1, pair arcs cost d). Its basic solutions are
spanning trees, so the optimum is the cheapest tree flow over all
(N+1)^(N-1) labelled trees, enumerated here through Pruefer codes.
"""
import heapq
from fractions import Fraction
from itertools import product

from util.errors import DomainError
from .flat_norm import merged_support

ORACLE_MAX_ATOMS = 6


def prufer_edges(code, n):
    """Edges of the labelled tree on 0..n-1 encoded by `code` (length n-2)."""
    degree = [1] * n
    for v in code:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _tree_cost(edges, demand, weight, n):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    # subtree demand below each edge, rooted at the ground node 0
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for u in order:
        for v in adj[u]:
            if parent[v] == -1:
                parent[v] = u
                order.append(v)
    below = list(demand)
    cost = Fraction(0)
    for v in reversed(order[1:]):
        u = parent[v]
        cost += abs(below[v]) * weight(u, v)
        below[u] += below[v]
    return cost


def flat_norm_oracle(m, metric):
    points, weights, _ = merged_support(m, metric)
    N = len(points)
    if N == 0:
        return Fraction(0)
    if N > ORACLE_MAX_ATOMS:
        raise DomainError("oracle supports at most {} atoms, got {}".format(ORACLE_MAX_ATOMS, N))
    demand = [Fraction(0)] + [Fraction(w) for w in weights]

    def weight(u, v):
        if u == 0 or v == 0:
            return Fraction(1)
        return Fraction(metric.distance(points[u - 1], points[v - 1]))

    n = N + 1
    if n == 2:
        return _tree_cost([(0, 1)], demand, weight, n)
    best = None
    for code in product(range(n), repeat=n - 2):
        cost = _tree_cost(prufer_edges(code, n), demand, weight, n)
        if best is None or cost < best:
            best = cost
    return best
