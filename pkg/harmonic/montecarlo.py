# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Monte Carlo estimates of Phi_{mu^n} f and P_{mu^n} f.

Trial t draws its steps from numpy.random.default_rng([seed, t]), so a trial
does not depend on which worker runs it. Trials are grouped in fixed chunks
of `chunk_size`; chunk moments are merged in chunk order, which makes the
aggregate independent of the number of workers.
"""
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from util.errors import DomainError
from util.misc import RunningMoments

WalkConfig = namedtuple('WalkConfig', ['sampler', 'n', 'trials', 'seed', 'chunk_size', 'num_workers'])
WalkConfig.__new__.__defaults__ = (256, 1)

MCEstimate = namedtuple('MCEstimate', ['mean', 'stderr', 'trials', 'seed', 'bias_bound'])


class StepSampler(object):
    """Draws i.i.d. steps from a finitely supported measure, renormalized.

    The missing mass (deficiency) of the measure is reported through
    `bias_bound`: for |f| <= 1 the n-step estimate is off by at most
    2 n deficiency / mass.
    """

    def __init__(self, mu):
        if len(mu) == 0:
            raise DomainError("cannot sample from the zero measure")
        self.atoms = list(mu.support)
        weights = np.array([float(mu[x]) for x in self.atoms], dtype=np.float64)
        self.mass = float(weights.sum())
        self.probs = weights / self.mass
        self.deficiency = max(0.0, 1.0 - self.mass)

    def draw(self, rng, n):
        idx = rng.choice(len(self.atoms), size=n, p=self.probs)
        return [self.atoms[i] for i in idx]

    def bias_bound(self, n):
        return 2.0 * n * self.deficiency / self.mass


def trial_rng(seed, trial):
    return np.random.default_rng([seed, trial])


def sample_walk(cfg, group, start=None, trial=0):
    """Path g_0 = start, g_k = g_{k-1} s_k."""
    g = group.identity() if start is None else start
    path = [g]
    for s in cfg.sampler.draw(trial_rng(cfg.seed, trial), cfg.n):
        g = group.mul(g, s)
        path.append(g)
    return path


def sample_action_walk(cfg, space, x, trial=0):
    """Path x_0 = x, x_k = s_k x_{k-1}; x_n has the law of mu^n acting on x."""
    path = [x]
    for s in cfg.sampler.draw(trial_rng(cfg.seed, trial), cfg.n):
        x = space.act(s, x)
        path.append(x)
    return path


def _chunk_moments(cfg, trial_fn, width, start, stop):
    values = np.array([trial_fn(trial_rng(cfg.seed, t)) for t in range(start, stop)], dtype=np.float64)
    values = values.reshape(stop - start, width)
    return [RunningMoments().update(values[:, k]) for k in range(width)]


def run_trials(cfg, trial_fn, width=1):
    """Moments of the `width` values trial_fn(rng) returns, one accumulator per value."""
    if cfg.trials < 1:
        raise DomainError("need at least one trial, got {}".format(cfg.trials))
    bounds = [(a, min(a + cfg.chunk_size, cfg.trials)) for a in range(0, cfg.trials, cfg.chunk_size)]
    if cfg.num_workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=cfg.num_workers) as pool:
            chunks = list(pool.map(lambda ab: _chunk_moments(cfg, trial_fn, width, *ab), bounds))
    else:
        chunks = [_chunk_moments(cfg, trial_fn, width, a, b) for a, b in bounds]
    total = [RunningMoments() for _ in range(width)]
    for chunk in chunks:
        for acc, part in zip(total, chunk):
            acc.merge(part)
    return total


def _estimate(cfg, moments, n):
    return MCEstimate(moments.mean, moments.stderr, moments.count, cfg.seed, cfg.sampler.bias_bound(n))


def empirical_transfer(cfg, f, g, group):
    """Estimate of Phi_{mu^n} f (g) = E f(g s_1 ... s_n)."""
    def trial(rng):
        x = g
        for s in cfg.sampler.draw(rng, cfg.n):
            x = group.mul(x, s)
        return [float(f(x))]
    return _estimate(cfg, run_trials(cfg, trial)[0], cfg.n)


def empirical_action_transfer(cfg, f, x, space):
    """Estimate of P_{mu^n} f (x)."""
    return empirical_action_profile(cfg, [f], x, space, [cfg.n])[(cfg.n, 0)]


def empirical_action_profile(cfg, functions, x, space, checkpoints):
    """Estimates of P_{mu^n} f(x) for every n in `checkpoints` (<= cfg.n) and every f,
    from one set of paths. Returns {(n, function index): MCEstimate}."""
    checkpoints = sorted(set(checkpoints))
    if checkpoints and checkpoints[-1] > cfg.n:
        raise DomainError("checkpoint {} beyond walk length {}".format(checkpoints[-1], cfg.n))
    marks = set(checkpoints)

    def trial(rng):
        y = x
        out = []
        for k, s in enumerate(cfg.sampler.draw(rng, cfg.n), 1):
            y = space.act(s, y)
            if k in marks:
                out.extend(float(f(y)) for f in functions)
        return out
    moments = run_trials(cfg, trial, width=len(checkpoints) * len(functions))
    out = {}
    for a, n in enumerate(checkpoints):
        for b in range(len(functions)):
            out[(n, b)] = _estimate(cfg, moments[a * len(functions) + b], n)
    return out
