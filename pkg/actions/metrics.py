# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Metrics on action spaces, used by Lipschitz test functions.
"""
from exact.dyadic import Dyadic
from exact.weights import as_weight


class ActionMetric(object):
    kind = ''

    def __call__(self, x, y):
        raise NotImplementedError


class DiscreteMetric(ActionMetric):
    kind = 'discrete'

    def __call__(self, x, y):
        return as_weight(0 if x == y else 1)


class AbsoluteMetric(ActionMetric):
    """|x - y| on dyadics; l1 distance on lattice tuples."""
    kind = 'absolute'

    def __call__(self, x, y):
        if isinstance(x, Dyadic):
            return as_weight(abs(x - y))
        return as_weight(sum(abs(a - b) for a, b in zip(x, y)))


class BoundedMetric(ActionMetric):
    """min(1, base(x, y))."""
    kind = 'bounded'

    def __init__(self, base=None):
        self.base = base or AbsoluteMetric()

    def __call__(self, x, y):
        return min(as_weight(1), self.base(x, y))


class SupMetric(ActionMetric):
    """Coordinatewise supremum of a base metric on tuples (sorted tuples for subsets)."""
    kind = 'sup'

    def __init__(self, base):
        self.base = base

    def __call__(self, x, y):
        return max(self.base(a, b) for a, b in zip(x, y))


ACTION_METRICS = ('discrete', 'absolute', 'bounded')


def build_action_metric(kind, induced=False):
    if kind == 'discrete':
        metric = DiscreteMetric()
    elif kind == 'absolute':
        metric = AbsoluteMetric()
    elif kind == 'bounded':
        metric = BoundedMetric()
    else:
        raise ValueError(f'ACTION metric {kind} not supported')
    return SupMetric(metric) if induced else metric
