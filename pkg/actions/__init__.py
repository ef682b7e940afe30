# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from .spaces import (ActionSpace, SelfAction, DyadicLineAction, DyadicIntervalAction, TuplePower,
                     FiniteSubsets, act, equivariance_check_kappa)
from .metrics import (DiscreteMetric, AbsoluteMetric, BoundedMetric, SupMetric, build_action_metric)
from .orbits import orbit_bfs, strong_transitivity_probe, orbit_gap, orbit_rows

ACTION_KINDS = ('self', 'dyadic-line', 'dyadic-interval')
INDUCED_KINDS = ('none', 'tuple', 'subsets')


def build_action(cfg, group):
    """cfg: the ACTION config node. Returns (space, metric)."""
    kind = cfg.kind
    if kind == 'self':
        space = SelfAction(group)
    elif kind == 'dyadic-line':
        space = DyadicLineAction(group)
    elif kind == 'dyadic-interval':
        space = DyadicIntervalAction(group)
    else:
        raise ValueError(f'ACTION kind {kind} not supported')
    if cfg.induced == 'tuple':
        space = TuplePower(space, cfg.power)
    elif cfg.induced == 'subsets':
        space = FiniteSubsets(space, cfg.power)
    elif cfg.induced != 'none':
        raise ValueError(f'ACTION induced {cfg.induced} not supported')
    metric = build_action_metric(cfg.metric, induced=cfg.induced != 'none')
    return space, metric
