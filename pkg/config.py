# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
# Modified from Obj2Seq (https://github.com/CASIA-IVA-Lab/Obj2Seq)
# Modified from Swin Transformer
# Copyright (c) 2021 Microsoft
# Licensed under The MIT License
# --------------------------------------------------------

import os
import yaml
from yacs.config import CfgNode as CN

from dualnorm.metrics import METRIC_KINDS
from exact.weights import WEIGHT_MODES, parse_weight
from util.errors import ConfigError, ParseError


# -----------------------------------------------------------------------------
# Config Settings
# -----------------------------------------------------------------------------

_C = CN()

# Base config files
_C.BASE = ['']

# -----------------------------------------------------------------------------
# Group settings
# -----------------------------------------------------------------------------
_C.GROUP = CN()
_C.GROUP.kind = 'lattice' # [lattice, free, cyclic, thompson-unit, thompson-line]
_C.GROUP.dim = 1 # lattice Z^dim
_C.GROUP.rank = 2 # free group rank
_C.GROUP.order = 6 # cyclic group order

# -----------------------------------------------------------------------------
# Action settings
# -----------------------------------------------------------------------------
_C.ACTION = CN()
_C.ACTION.kind = 'self' # [self, dyadic-line, dyadic-interval]
_C.ACTION.induced = 'none' # [none, tuple, subsets]
_C.ACTION.power = 1 # n for X^n and P_n(X)
_C.ACTION.metric = 'absolute' # [absolute, bounded, discrete]; sup-extended on induced spaces

# -----------------------------------------------------------------------------
# Step measure
# -----------------------------------------------------------------------------
_C.MEASURE = CN()
_C.MEASURE.recipe = 'walk' # [walk, atoms, file, kv]
_C.MEASURE.walk = 'lazy' # [lazy, simple]
_C.MEASURE.laziness = '1/2' # weight of the identity in the lazy walk
_C.MEASURE.atoms = [] # ['element weight', ...] for recipe atoms
_C.MEASURE.file = '' # measure file for recipe file

# -----------------------------------------------------------------------------
# Metric on the group (flat norm)
# -----------------------------------------------------------------------------
_C.METRIC = CN()
_C.METRIC.kind = 'auto' # [auto, word, displacement, discrete]; auto: word, or displacement on F
_C.METRIC.base_points = [] # displacement base points; empty: variant defaults
_C.METRIC.num_points = 8

# -----------------------------------------------------------------------------
# Flat-norm LP
# -----------------------------------------------------------------------------
_C.DUAL_NORM = CN()
_C.DUAL_NORM.backend = 'auto' # [auto, simplex, flow, highs]
_C.DUAL_NORM.simplex_max_atoms = 24
_C.DUAL_NORM.flow_max_atoms = 2000

# -----------------------------------------------------------------------------
# Numeric knobs
# -----------------------------------------------------------------------------
_C.NUMERIC = CN()
_C.NUMERIC.weight_mode = 'exact' # [exact, float]
_C.NUMERIC.n_max = 10
_C.NUMERIC.tol = '1/1000000' # convergence tolerance of iterate_pi
_C.NUMERIC.prune = '0' # atoms lighter than this are dropped after every convolution
_C.NUMERIC.seed = 1107
_C.NUMERIC.trials = 0 # Monte Carlo trials; 0 disables sampling
_C.NUMERIC.chunk_size = 256 # trials per Monte Carlo chunk
_C.NUMERIC.num_workers = 1
_C.NUMERIC.exact_support_cap = 20000 # exact powers stop above this support size
_C.NUMERIC.product_cap = 100000
_C.NUMERIC.search_cap = 100000 # BFS cap for orbits and probes
_C.NUMERIC.record = [] # n values written to artifacts; empty: every n

# -----------------------------------------------------------------------------
# Diagnostic
# -----------------------------------------------------------------------------
_C.DIAGNOSTIC = CN()
_C.DIAGNOSTIC.name = 'deficiency-profile'
_C.DIAGNOSTIC.print_freq = 10
_C.DIAGNOSTIC.elements = [] # group elements g; empty: symmetric generators
_C.DIAGNOSTIC.points = [] # evaluation points (group elements or action points)
_C.DIAGNOSTIC.sample_range = [] # [lo, hi] integer window added to points
_C.DIAGNOSTIC.cesaro = False # profile Cesaro averages instead of powers

_C.DIAGNOSTIC.FUNCTIONS = CN()
_C.DIAGNOSTIC.FUNCTIONS.kind = 'window' # [window, anchors, clamped-identity, first-letter, last-letter, boundary-harmonic, constant]
_C.DIAGNOSTIC.FUNCTIONS.centers = ['0']
_C.DIAGNOSTIC.FUNCTIONS.radius = '10'
_C.DIAGNOSTIC.FUNCTIONS.anchors = [] # ['point value', ...]
_C.DIAGNOSTIC.FUNCTIONS.lip = '1'
_C.DIAGNOSTIC.FUNCTIONS.cap = '1'
_C.DIAGNOSTIC.FUNCTIONS.letters = ['a']
_C.DIAGNOSTIC.FUNCTIONS.second = '' # second family kind for poisson-product; empty: same family

_C.DIAGNOSTIC.PROBE = CN()
_C.DIAGNOSTIC.PROBE.source = [] # points of the source tuple/subset
_C.DIAGNOSTIC.PROBE.target = []
_C.DIAGNOSTIC.PROBE.depth = 8

# -----------------------------------------------------------------------------
# Recursive measure construction
# -----------------------------------------------------------------------------
_C.KV = CN()
_C.KV.depth = 2 # truncation depth M
_C.KV.taus = 'geometric' # tau_m = 2^-(m+1)
_C.KV.chain = 'ball' # S_m = word ball of radius m
_C.KV.oracle = 'box' # [box, haar]
_C.KV.max_side = 401 # box oracle side cap
_C.KV.claim_levels = [1, 2]
_C.KV.profile_n = 20
_C.KV.claim1 = True
_C.KV.claim1_max_tuples = 64


GROUP_KINDS = ('lattice', 'free', 'cyclic', 'thompson-unit', 'thompson-line')
DIAGNOSTICS = ('deficiency-profile', 'liouville-scan', 'pi-iterate', 'poisson-product', 'kv-verify',
               'relations-check', 'transitivity-probe')
EXACT_KEYS = ('MEASURE.laziness', 'NUMERIC.tol', 'NUMERIC.prune', 'DIAGNOSTIC.FUNCTIONS.radius',
              'DIAGNOSTIC.FUNCTIONS.lip', 'DIAGNOSTIC.FUNCTIONS.cap')


def _lookup(config, key):
    node = config
    for part in key.split('.'):
        node = node[part]
    return node


def _assign(config, key, value):
    *path, leaf = key.split('.')
    node = config
    for part in path:
        node = node[part]
    node[leaf] = value


def _pop_exact(tree, prefix=''):
    """Remove EXACT_KEYS from a nested dict; returns {key: text}.

    yacs literal-evaluates string values, so '10' would arrive as an int and
    clash with the str default; these keys are merged as text instead.
    """
    found = {}
    for k in list(tree):
        key = prefix + k
        if isinstance(tree[k], dict):
            found.update(_pop_exact(tree[k], key + '.'))
        elif key in EXACT_KEYS:
            found[key] = str(tree.pop(k))
    return found


def _update_config_from_file(config, cfg_file):
    config.defrost()
    with open(cfg_file, 'r') as f:
        yaml_cfg = yaml.load(f, Loader=yaml.FullLoader) or {}

    for cfg in yaml_cfg.setdefault('BASE', ['']):
        if cfg:
            _update_config_from_file(
                config, os.path.join(os.path.dirname(cfg_file), cfg)
            )
    print('=> merge config from {}'.format(cfg_file))
    config.defrost()
    exact = _pop_exact(yaml_cfg)
    config.merge_from_other_cfg(CN(yaml_cfg))
    for key, text in exact.items():
        _assign(config, key, text)
    config.freeze()


def _merge_opts(config, opts):
    if len(opts) % 2:
        raise ConfigError('--opts', "expected KEY VALUE pairs, got {} items".format(len(opts)))
    rest = []
    for key, value in zip(opts[0::2], opts[1::2]):
        if key in EXACT_KEYS:
            _assign(config, key, str(value))
        else:
            rest.extend([key, value])
    try:
        config.merge_from_list(rest)
    except AssertionError as err:
        # yacs reports unknown keys through assertions
        raise ConfigError('--opts', str(err))


def dump_manifest(config):
    """The resolved config as YAML; BASE is cleared so the file replays on its own."""
    out = config.clone()
    out.defrost()
    out.BASE = ['']
    return out.dump()


def update_config(config, args):
    if getattr(args, 'cfg', None):
        _update_config_from_file(config, args.cfg)

    config.defrost()
    if getattr(args, 'opts', None):
        _merge_opts(config, args.opts)
    if getattr(args, 'seed', None) is not None:
        config.NUMERIC.seed = args.seed
    if getattr(args, 'num_workers', None) is not None:
        config.NUMERIC.num_workers = args.num_workers
    post_process(config)
    config.freeze()


def get_config(args):
    """Get a yacs CfgNode object with default values."""
    # Return a clone so that the defaults will not be altered
    # This is for the "local variable" use pattern
    config = _C.clone()
    update_config(config, args)
    args.GROUP = config.GROUP
    args.MEASURE = config.MEASURE
    args.NUMERIC = config.NUMERIC
    args.DIAGNOSTIC = config.DIAGNOSTIC

    return config


def post_process(config):
    if config.GROUP.kind not in GROUP_KINDS:
        raise ConfigError('GROUP.kind', "expected one of {}, got {!r}".format(GROUP_KINDS, config.GROUP.kind))
    if config.NUMERIC.weight_mode not in WEIGHT_MODES:
        raise ConfigError('NUMERIC.weight_mode', "expected one of {}".format(WEIGHT_MODES))
    if config.DIAGNOSTIC.name not in DIAGNOSTICS:
        raise ConfigError('DIAGNOSTIC.name', "expected one of {}, got {!r}".format(DIAGNOSTICS, config.DIAGNOSTIC.name))
    for key in EXACT_KEYS:
        try:
            parse_weight(str(_lookup(config, key)))
        except ParseError as err:
            raise ConfigError(key, str(err))
    # numbers given in YAML without quotes arrive as int/float; keep the text form
    config.NUMERIC.tol = str(config.NUMERIC.tol)
    config.NUMERIC.prune = str(config.NUMERIC.prune)
    for key in ('n_max', 'num_workers', 'chunk_size'):
        if config.NUMERIC[key] < 1:
            raise ConfigError('NUMERIC.' + key, "must be >= 1, got {}".format(config.NUMERIC[key]))
    if any(not isinstance(n, int) or n < 1 for n in config.NUMERIC.record):
        raise ConfigError('NUMERIC.record', "expected positive integers, got {}".format(list(config.NUMERIC.record)))
    if config.NUMERIC.trials < 0:
        raise ConfigError('NUMERIC.trials', "must be >= 0")
    if len(config.DIAGNOSTIC.sample_range) not in (0, 2):
        raise ConfigError('DIAGNOSTIC.sample_range', "expected [lo, hi]")
    if config.MEASURE.recipe == 'kv' and config.GROUP.kind not in ('lattice', 'cyclic'):
        raise ConfigError('MEASURE.recipe', "kv construction needs a registered oracle (lattice or cyclic group)")
    if config.DIAGNOSTIC.name == 'kv-verify' and config.GROUP.kind not in ('lattice', 'cyclic'):
        raise ConfigError('GROUP.kind', "kv-verify needs a lattice or cyclic group")
    if config.METRIC.kind not in METRIC_KINDS:
        raise ConfigError('METRIC.kind', "expected one of {}, got {!r}".format(METRIC_KINDS, config.METRIC.kind))
    if config.METRIC.kind == 'word' and config.GROUP.kind.startswith('thompson'):
        raise ConfigError('METRIC.kind', "word length is not computed in {}; use displacement".format(config.GROUP.kind))
    if config.DUAL_NORM.backend not in ('auto', 'simplex', 'flow', 'highs'):
        raise ConfigError('DUAL_NORM.backend', "unknown backend {!r}".format(config.DUAL_NORM.backend))
