# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Schedule of the recursive mixture mu = sum_m tau_m alpha_m: the weights
tau_m, the increasing chain S_0 = {e} <= S_1 <= ..., and the power n_m that
level m must absorb.
"""
from fractions import Fraction

from groups.base import ball
from util.errors import DomainError

TAU_KINDS = ('geometric',)
CHAIN_KINDS = ('ball',)


def geometric_taus(depth):
    """tau_m = 2^-(m+1) for m = 0..depth."""
    return [Fraction(1, 2 ** (m + 1)) for m in range(depth + 1)]


def compute_nm(taus, m):
    """Smallest n >= 1 with (tau_0 + ... + tau_{m-1})^n < 1/m."""
    if m < 1:
        raise DomainError("level must be >= 1, got {}".format(m))
    if len(taus) < m:
        raise DomainError("need {} weights to compute n_{}, got {}".format(m, m, len(taus)))
    prefix = sum((Fraction(t) for t in taus[:m]), Fraction(0))
    if prefix >= 1:
        raise DomainError("weight prefix {} must be < 1".format(prefix))
    bound = Fraction(1, m)
    n, power = 1, prefix
    while not power < bound:
        n += 1
        power *= prefix
    return n


def ball_chain(group, depth, cap=100000):
    """S_m = word ball of radius m, m = 0..depth."""
    return [ball(group, m, cap) for m in range(depth + 1)]


class KVSchedule(object):

    def __init__(self, taus, chain, metric):
        self.taus = [Fraction(t) for t in taus]
        self.chain = [list(s) for s in chain]
        self.metric = metric
        if len(self.taus) != len(self.chain):
            raise DomainError("one weight per chain level needed ({} != {})".format(len(self.taus), len(self.chain)))
        if any(t <= 0 for t in self.taus):
            raise DomainError("weights must be positive")
        if self.truncated_sum > 1:
            raise DomainError("weights sum to {} > 1".format(self.truncated_sum))
        for m in range(1, len(self.chain)):
            if not set(self.chain[m - 1]) <= set(self.chain[m]):
                raise DomainError("chain is not increasing at level {}".format(m))

    @property
    def depth(self):
        return len(self.taus) - 1

    @property
    def truncated_sum(self):
        return sum(self.taus, Fraction(0))

    @property
    def tail(self):
        return 1 - self.truncated_sum

    def nm(self, m):
        return compute_nm(self.taus, m)

    def check_base(self, group):
        if self.chain[0] != [group.identity()]:
            raise DomainError("S_0 must be {e}")


def build_schedule(cfg, group, metric):
    """cfg: the KV config node."""
    if cfg.taus == 'geometric':
        taus = geometric_taus(cfg.depth)
    else:
        raise ValueError(f'KV taus {cfg.taus} not supported')
    if cfg.chain == 'ball':
        chain = ball_chain(group, cfg.depth)
    else:
        raise ValueError(f'KV chain {cfg.chain} not supported')
    schedule = KVSchedule(taus, chain, metric)
    schedule.check_base(group)
    return schedule
