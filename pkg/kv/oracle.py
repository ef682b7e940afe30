# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Foelner oracles: given eps and a finite set E, return a finitely supported
probability alpha with E inside its support and p_d(g alpha - alpha) < eps
for every g in E.

Support is bought by mixing: alpha = (1 - a) beta + a uniform(E) with
a = eps / 5, which costs at most 2a of invariance, so beta itself must
reach (eps - 2a) / (1 - a).
"""
from fractions import Fraction

from dualnorm.deficiency import deficiencies
from exact.weights import as_weight
from groups.cyclic import CyclicGroup
from groups.lattice import LatticeGroup
from measures.measure import uniform, support_mix
from util.errors import CapExceededError, DomainError


def mixing_weight(eps):
    return Fraction(eps) / 5


def base_target(eps):
    a = mixing_weight(eps)
    return (Fraction(eps) - 2 * a) / (1 - a)


class BoxOracle(object):
    """Uniform measure on a centred cube of odd side s in Z^d, grown until it is eps-invariant."""
    name = 'box'

    def __init__(self, group, metric, max_side=401, backend=None, num_workers=1):
        if not isinstance(group, LatticeGroup):
            raise DomainError("box oracle needs a lattice group, got {}".format(group.name))
        self.group = group
        self.metric = metric
        self.max_side = max_side
        self.backend = backend
        self.num_workers = num_workers

    def box(self, side):
        h = side // 2
        pts = [()]
        for _ in range(self.group.dim):
            pts = [p + (k,) for p in pts for k in range(-h, h + 1)]
        return uniform(pts)

    def initial_side(self, E, target):
        reach = max((sum(abs(a) for a in g) for g in E), default=0)
        extent = max((abs(a) for g in E for a in g), default=0)
        side = 2 * extent + 1
        while not Fraction(2 * reach, side) < target:
            side += 2
        return side

    def __call__(self, eps, E, level=None):
        """Returns (alpha, info)."""
        eps = Fraction(eps)
        E = list(dict.fromkeys(E))
        target = base_target(eps)
        side = self.initial_side(E, target)
        moving = [g for g in E if g != self.group.identity()]
        while True:
            if side > self.max_side:
                raise CapExceededError('box side', side, self.max_side, level)
            beta = self.box(side)
            worst = max((r.value for r in deficiencies(beta, moving, self.metric, self.group, self.backend,
                                                       self.num_workers)), default=as_weight(0))
            if worst < target:
                break
            side += 2
        alpha = support_mix(beta, E, mixing_weight(eps))
        return alpha, {'oracle': self.name, 'side': side, 'base_deficiency': worst, 'target': target,
                       'mixing_weight': mixing_weight(eps)}

    def describe(self):
        return {'name': self.name, 'groups': ['lattice'], 'max_side': self.max_side,
                'mixing_weight': 'eps/5', 'base_target': '(eps - 2 eps/5) / (1 - eps/5)'}


class HaarOracle(object):
    """Uniform measure on a finite group: invariant, full support."""
    name = 'haar'

    def __init__(self, group, metric=None, **kwargs):
        if not isinstance(group, CyclicGroup):
            raise DomainError("haar oracle needs a finite group, got {}".format(group.name))
        self.group = group

    def __call__(self, eps, E, level=None):
        return uniform(self.group.elements()), {'oracle': self.name, 'side': None}

    def describe(self):
        return {'name': self.name, 'groups': ['cyclic']}


ORACLES = {'box': BoxOracle, 'haar': HaarOracle}


def build_oracle(cfg, group, metric, backend=None, num_workers=1):
    """cfg: the KV config node."""
    name = cfg.oracle
    if name == 'box':
        return BoxOracle(group, metric, cfg.max_side, backend, num_workers)
    if name == 'haar':
        return HaarOracle(group, metric)
    raise ValueError(f'KV oracle {name} not supported')
