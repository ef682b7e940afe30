# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from .base import Group, Word, ball
from .lattice import LatticeGroup
from .free import FreeGroup
from .cyclic import CyclicGroup
from .pl import PLElement, pl_eval, pl_identity
from .thompson import (ThompsonGroup, f_generators, gamma, check_relations, kappa, kappa_inv,
                       word_eval)

GROUP_KINDS = ('lattice', 'free', 'cyclic', 'thompson-unit', 'thompson-line')


def build_group(cfg):
    """cfg: the GROUP config node."""
    kind = cfg.kind
    if kind == 'lattice':
        return LatticeGroup(cfg.dim)
    if kind == 'free':
        return FreeGroup(cfg.rank)
    if kind == 'cyclic':
        return CyclicGroup(cfg.order)
    if kind in ('thompson-unit', 'thompson-line'):
        return ThompsonGroup(kind.split('-', 1)[1])
    raise ValueError(f'GROUP kind {kind} not supported')
