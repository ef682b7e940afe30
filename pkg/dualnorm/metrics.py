# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Right-invariant (pseudo)metrics on groups, d(x, y) = rho(x y^-1).

Besides `distance`, a metric lists the pairs of a point set that are closer
than 2: only those pairs can constrain a 1-bounded 1-Lipschitz function.
"""
from itertools import combinations

from exact.dyadic import Dyadic
from exact.weights import as_weight
from groups.thompson import ThompsonGroup
from util.errors import DomainError

METRIC_KINDS = ('auto', 'word', 'displacement', 'discrete')

DEFAULT_BASE_POINTS = {
    'line': ['0', '1', '-1', '1/2', '-1/2', '2', '-2', '1/4'],
    'unit': ['1/2', '1/4', '3/4', '1/8', '3/8', '5/8', '7/8', '1/16'],
}


class MetricSpec(object):
    kind = ''
    pseudometric = False

    def __init__(self, group):
        self.group = group

    def distance(self, x, y):
        raise NotImplementedError

    def __call__(self, x, y):
        return self.distance(x, y)

    def merge_key(self, x):
        """Points with equal keys are at distance 0."""
        return x

    def close_pairs(self, points):
        """(i, j, d) with i < j and d(points[i], points[j]) < 2."""
        out = []
        two = as_weight(2)
        for i, j in combinations(range(len(points)), 2):
            d = self.distance(points[i], points[j])
            if d < two:
                out.append((i, j, d))
        return out

    def describe(self):
        return {'kind': self.kind, 'pseudometric': self.pseudometric}


class WordMetric(MetricSpec):
    """|x y^-1| for the group's symmetric generators."""
    kind = 'word'

    def __init__(self, group):
        super().__init__(group)
        if group.word_length(group.identity()) is None:
            raise DomainError("word metric is not available for {}".format(group.name))
        self._gens = [g for _, g in group.generators()]
        self._cache = {}

    def norm(self, z):
        d = self._cache.get(z)
        if d is None:
            d = self._cache[z] = as_weight(self.group.word_length(z))
        return d

    def distance(self, x, y):
        return self.norm(self.group.mul(x, self.group.inv(y)))

    def close_pairs(self, points):
        # distance < 2 between distinct points means y = s x for a generator s
        index = {x: i for i, x in enumerate(points)}
        one = as_weight(1)
        out = []
        for i, x in enumerate(points):
            for s in self._gens:
                j = index.get(self.group.mul(s, x))
                if j is not None and j > i:
                    out.append((i, j, one))
        return sorted(set(out))


class DisplacementMetric(MetricSpec):
    """rho(z) = sum_i 2^-i [z(p_i) != p_i] over base points p_1..p_K.

    Only separates elements that move some base point, hence a pseudometric.
    """
    kind = 'displacement'
    pseudometric = True

    def __init__(self, group, base_points=None, num_points=8):
        super().__init__(group)
        if not isinstance(group, ThompsonGroup):
            raise DomainError("displacement metric needs a Thompson group, got {}".format(group.name))
        if not base_points:
            base_points = DEFAULT_BASE_POINTS[group.variant][:num_points]
        self.points = [Dyadic.coerce(p) for p in base_points]
        self.weights = [as_weight(Dyadic(1, i + 1)) for i in range(len(self.points))]

    def merge_key(self, x):
        # x y^-1 fixes p iff x^-1(p) == y^-1(p)
        return tuple(x.preimage(p) for p in self.points)

    def distance(self, x, y):
        kx, ky = self.merge_key(x), self.merge_key(y)
        return sum((w for w, a, b in zip(self.weights, kx, ky) if a != b), as_weight(0))

    def close_pairs(self, points):
        keys = [self.merge_key(x) for x in points]
        out = []
        for i, j in combinations(range(len(points)), 2):
            d = sum((w for w, a, b in zip(self.weights, keys[i], keys[j]) if a != b), as_weight(0))
            out.append((i, j, d))
        return out

    def describe(self):
        out = super().describe()
        out['base_points'] = [str(p) for p in self.points]
        return out


class DiscreteMetric(MetricSpec):
    kind = 'discrete'

    def distance(self, x, y):
        return as_weight(0 if x == y else 1)


class TableMetric(MetricSpec):
    """Explicit symmetric distance table over a fixed point list."""
    kind = 'table'

    def __init__(self, points, table):
        super().__init__(None)
        self.index = {x: i for i, x in enumerate(points)}
        self.table = table

    def distance(self, x, y):
        if x == y:
            return as_weight(0)
        i, j = sorted((self.index[x], self.index[y]))
        return as_weight(self.table[(i, j)])


def build_metric(cfg, group):
    """cfg: the METRIC config node. 'auto' is the word metric, or the
    displacement pseudometric on Thompson's group where word length is not computed."""
    kind = cfg.kind
    if kind == 'auto':
        kind = 'displacement' if isinstance(group, ThompsonGroup) else 'word'
    if kind == 'word':
        return WordMetric(group)
    if kind == 'displacement':
        return DisplacementMetric(group, list(cfg.base_points), cfg.num_points)
    if kind == 'discrete':
        return DiscreteMetric(group)
    raise ValueError(f'METRIC kind {kind} not supported')
