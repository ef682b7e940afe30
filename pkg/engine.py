# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
# Modified from Obj2Seq (https://github.com/CASIA-IVA-Lab/Obj2Seq)
# Modified from DETR (https://github.com/facebookresearch/detr)
# Copyright (c) Facebook, Inc. and its affiliates. All Rights Reserved
# ------------------------------------------------------------------------
"""
Diagnostic runners used in main.py
"""
from collections import namedtuple
from itertools import product

import util.misc as utils
from actions import SelfAction, build_action, equivariance_check_kappa, orbit_bfs, orbit_gap, orbit_rows
from actions import strong_transitivity_probe
from dualnorm import DeficiencyProfile, build_metric, iter_deficiency_profile, set_flat_norm_defaults
from exact.dyadic import Dyadic
from exact.weights import as_weight, set_weight_mode, weight_tolerance
from groups import ThompsonGroup, build_group, check_relations, kappa
from harmonic import (build_functions, harmonic_residual_group, iter_pi, liouville_scan, monotone_square_check,
                      product as function_product)
from kv import build_kv, verify_claims
from measures import build_measure, nondegeneracy_probe, write_measure
from util.errors import ConfigError

Experiment = namedtuple('Experiment', ['config', 'group', 'space', 'action_metric', 'metric'])

KAPPA_VALUES = (('1/2', '0'), ('3/4', '1'), ('1/4', '-1'))
KAPPA_POINTS = ('1/2', '1/4', '3/4', '3/8', '5/8', '1/16')


def build_experiment(config):
    set_weight_mode(config.NUMERIC.weight_mode)
    set_flat_norm_defaults(config.DUAL_NORM.backend, config.DUAL_NORM.simplex_max_atoms,
                           config.DUAL_NORM.flow_max_atoms)
    group = build_group(config.GROUP)
    space, action_metric = build_action(config.ACTION, group)
    metric = build_metric(config.METRIC, group)
    return Experiment(config, group, space, action_metric, metric)


def _emit(config):
    record = set(config.NUMERIC.record)
    if not record:
        return None
    return lambda n: n in record


def _num_records(config):
    n_max = config.NUMERIC.n_max
    record = [n for n in set(config.NUMERIC.record) if n <= n_max]
    return len(record) if config.NUMERIC.record else n_max


def _elements(exp):
    texts = exp.config.DIAGNOSTIC.elements
    if not texts:
        return [g for _, g in exp.group.generators()]
    return [exp.group.parse_element(t) for t in texts]


def _points(exp, parse):
    cfg = exp.config.DIAGNOSTIC
    points = [parse(t) for t in cfg.points]
    if cfg.sample_range:
        lo, hi = cfg.sample_range
        points.extend(parse(str(k)) for k in range(lo, hi + 1))
    points = list(dict.fromkeys(points))
    if not points:
        raise ConfigError('DIAGNOSTIC.points', "no evaluation points; set points or sample_range")
    return points


def _measure(exp, writer):
    mu, info = build_measure(exp.config, exp.group)
    if writer is not None:
        write_measure(writer.path('mu.txt'), mu, exp.group.format_element, exp.group.name,
                      {k: v for k, v in info.items() if k != 'header'})
    return mu, dict(info, support=len(mu), mass=mu.mass, deficiency=mu.deficiency)


def _reading(first, last):
    if first is None or last is None:
        return 'inconclusive'
    return 'evidence' if last == 0 or last <= first / 2 else 'counter-evidence'


def evaluate_deficiency_profile(exp, writer):
    """p_d(g mu^n - mu^n) for every g in DIAGNOSTIC.elements and n <= n_max."""
    cfg, group = exp.config, exp.group
    mu, info = _measure(exp, writer)
    elements = _elements(exp)
    cesaro = cfg.DIAGNOSTIC.cesaro
    prune = as_weight(cfg.NUMERIC.prune)
    profile = DeficiencyProfile(exp.metric, elements, cesaro)

    metric_logger = utils.MetricLogger(delimiter="  ")
    header = 'Profile:'
    stream = iter_deficiency_profile(mu, elements, cfg.NUMERIC.n_max, exp.metric, group, threshold=prune,
                                     cesaro=cesaro, emit=_emit(cfg), num_workers=cfg.NUMERIC.num_workers,
                                     profile=profile)
    for n, results in metric_logger.log_every(stream, cfg.DIAGNOSTIC.print_freq, header, total=_num_records(cfg)):
        worst = max(r.value for r in results)
        metric_logger.update(max_deficiency=worst)
        writer.log({'diagnostic': 'deficiency-profile', 'n': n, 'max_deficiency': worst})

    rows = [[r['n'], group.format_element(r['g']), r['value'], r['pruned'], r['backend'], r['exact']]
            for r in profile.rows]
    writer.write_csv('deficiency-profile.csv', ['n', 'g', 'value', 'pruned', 'backend', 'exact'], rows)

    by_n = profile.max_by_n()
    monotone = [{'g': group.format_element(r['g']), 'non_increasing': r['non_increasing']}
                for r in profile.monotone_report()]
    # without pruning the powers satisfy the contraction bound exactly
    verified = not cesaro and prune == 0
    report = {
        'diagnostic': 'deficiency-profile',
        'measure': info,
        'metric': exp.metric.describe(),
        'cesaro': cesaro,
        'max_by_n': by_n,
        'non_increasing': monotone,
        'non_increasing_is_verified_bound': verified,
        'reading': _reading(by_n[0][1] if by_n else None, by_n[-1][1] if by_n else None),
    }
    writer.write_json('deficiency-profile.json', report)
    ok = all(r['non_increasing'] for r in monotone) if verified else True
    return {'ok': ok, 'last_max_deficiency': by_n[-1][1] if by_n else None, 'reading': report['reading']}


def evaluate_liouville_scan(exp, writer):
    """Oscillation of (P_mu)^n f over a finite sample of the action space."""
    cfg, space = exp.config, exp.space
    mu, info = _measure(exp, writer)
    functions = build_functions(cfg.DIAGNOSTIC.FUNCTIONS, space, exp.action_metric)
    sample = _points(exp, space.parse_point)

    metric_logger = utils.MetricLogger(delimiter="  ")
    header = 'Liouville:'
    n_max = cfg.NUMERIC.n_max

    def on_step(n, phase):
        if n % cfg.DIAGNOSTIC.print_freq == 0 or n == n_max:
            print('{} [{}/{}]  phase: {}'.format(header, n, n_max, phase))
        writer.log({'diagnostic': 'liouville-scan', 'n': n, 'phase': phase})

    scan = liouville_scan(space, mu, functions, sample, n_max, record=list(cfg.NUMERIC.record),
                          threshold=as_weight(cfg.NUMERIC.prune),
                          exact_support_cap=cfg.NUMERIC.exact_support_cap, trials=cfg.NUMERIC.trials,
                          seed=cfg.NUMERIC.seed, chunk_size=cfg.NUMERIC.chunk_size,
                          num_workers=cfg.NUMERIC.num_workers, on_step=on_step)
    for r in scan.rows:
        metric_logger.update(oscillation=r['oscillation'])

    rows = [[r['n'], r['function'], r['oscillation'], r['max'], r['min'], r['phase'], r['pruned'], r['stderr']]
            for r in scan.rows]
    writer.write_csv('liouville-scan.csv', ['n', 'function', 'oscillation', 'max', 'min', 'phase', 'pruned',
                                            'stderr'], rows)
    verdicts = scan.verdicts()
    report = {
        'diagnostic': 'liouville-scan',
        'measure': info,
        'space': space.name,
        'sample': [space.format_point(x) for x in sample],
        'exact_until': scan.exact_until,
        'truncated': scan.truncated,
        'verdicts': verdicts,
        'sample_note': 'oscillation over a finite sample is a lower bound',
    }
    writer.write_json('liouville-scan.json', report)
    print("Averaged stats:", metric_logger)
    return {'ok': True, 'readings': [v['reading'] for v in verdicts], 'truncated': scan.truncated}


def _iterate_families(exp, writer, name, families):
    """Shared loop of pi-iterate and poisson-product; families: [(label, function)]."""
    cfg, group = exp.config, exp.group
    mu, info = _measure(exp, writer)
    points = _points(exp, group.parse_element)
    n_max = cfg.NUMERIC.n_max
    prune = as_weight(cfg.NUMERIC.prune)
    rows, converged = [], []

    metric_logger = utils.MetricLogger(delimiter="  ")
    for label, f in families:
        header = '{} [{}]'.format(name, label)
        stream = iter_pi(mu, f, points, n_max, cfg.NUMERIC.tol, group, threshold=prune, emit=_emit(cfg),
                         num_workers=cfg.NUMERIC.num_workers)
        state = {}
        for n, step_rows, state in metric_logger.log_every(stream, cfg.DIAGNOSTIC.print_freq, header, total=n_max):
            for r in step_rows:
                rows.append([label, r['n'], group.format_element(r['point']), r['value'], r['cesaro'], r['pruned'],
                             r['converged_at']])
            if step_rows:
                metric_logger.update(spread=max(r['value'] for r in step_rows) - min(r['value'] for r in step_rows))
                writer.log({'diagnostic': name, 'function': label, 'n': n})
        converged.append({'function': label,
                          'points': [{'point': group.format_element(g), 'converged_at': st['converged'],
                                      'last': st['prev']} for g, st in state.items()]})
    writer.write_csv(name + '.csv', ['function', 'n', 'point', 'value', 'cesaro', 'pruned', 'converged_at'], rows)
    print("Averaged stats:", metric_logger)
    return mu, info, points, converged


def evaluate_pi_iterate(exp, writer):
    """pi_mu f = lim Phi_{mu^n} f on DIAGNOSTIC.points."""
    cfg, group = exp.config, exp.group
    functions = build_functions(cfg.DIAGNOSTIC.FUNCTIONS, SelfAction(group), exp.action_metric)
    mu, info, points, converged = _iterate_families(exp, writer, 'pi-iterate', [(f.name, f) for f in functions])
    report = {'diagnostic': 'pi-iterate', 'measure': info, 'tol': cfg.NUMERIC.tol, 'convergence': converged,
              'harmonic_residual': [{'function': f.name, 'max_residual': harmonic_residual_group(f, mu, points, group)}
                                    for f in functions]}
    ok = True
    if cfg.DIAGNOSTIC.FUNCTIONS.kind == 'boundary-harmonic':
        checks = [dict(monotone_square_check(mu, f, points, cfg.NUMERIC.n_max, group), function=f.name)
                  for f in functions]
        for c in checks:
            c['rows'] = [dict(r, point=group.format_element(r['point'])) for r in c['rows']]
        report['square_non_decreasing'] = checks
        # only a bound when f is harmonic for mu, which the residual tells
        harmonic = all(r['max_residual'] <= weight_tolerance() for r in report['harmonic_residual'])
        ok = all(c['ok'] for c in checks) if harmonic else True
    writer.write_json('pi-iterate.json', report)
    return {'ok': ok, 'functions': len(functions)}


def evaluate_poisson_product(exp, writer):
    """f1 ._mu f2 = pi_mu(f1 f2) for pairs from FUNCTIONS and FUNCTIONS.second."""
    cfg, group = exp.config, exp.group
    space = SelfAction(group)
    first = build_functions(cfg.DIAGNOSTIC.FUNCTIONS, space, exp.action_metric)
    if cfg.DIAGNOSTIC.FUNCTIONS.second:
        node = cfg.DIAGNOSTIC.FUNCTIONS.clone()
        node.defrost()
        node.kind = cfg.DIAGNOSTIC.FUNCTIONS.second
        second = build_functions(node, space, exp.action_metric)
    else:
        second = first
    families = [('{}*{}'.format(f1.name, f2.name), function_product(f1, f2)) for f1, f2 in product(first, second)]
    _, info, _, converged = _iterate_families(exp, writer, 'poisson-product', families)
    writer.write_json('poisson-product.json', {'diagnostic': 'poisson-product', 'measure': info,
                                                'tol': cfg.NUMERIC.tol, 'convergence': converged})
    return {'ok': True, 'pairs': len(families)}


def evaluate_kv_verify(exp, writer):
    """Build the recursive mixture and re-check its conditions and claim bounds."""
    cfg, group = exp.config, exp.group
    num_workers = cfg.NUMERIC.num_workers
    result = build_kv(cfg, group, exp.metric, num_workers)
    writer.log({'diagnostic': 'kv-verify', 'stage': 'built', 'levels': len(result.levels)})
    write_measure(writer.path('mu.txt'), result.mu, group.format_element, group.name,
                  {'kv_depth': result.schedule.depth, 'kv_tail': result.tail})
    claims = verify_claims(result, list(cfg.KV.claim_levels), profile_n=cfg.KV.profile_n, claim1=cfg.KV.claim1,
                           claim1_max_tuples=cfg.KV.claim1_max_tuples, num_workers=num_workers)
    writer.log({'diagnostic': 'kv-verify', 'stage': 'verified', 'ok': claims['ok']})

    level_rows = result.level_rows()
    writer.write_csv('kv-levels.csv', ['m', 'tau', 'n_m', 'eps', 'requirement_size', 'support_size',
                                       'max_deficiency', 'condition_i', 'condition_ii', 'side'],
                     [[r[k] for k in ('m', 'tau', 'n_m', 'eps', 'requirement_size', 'support_size', 'max_deficiency',
                                      'condition_i', 'condition_ii', 'side')] for r in level_rows])
    rows = []
    for r in claims['claim1']:
        rows.append(['claim1', r['m'], ' '.join(str(k) for k in r['tuple']), group.format_element(r['g']),
                     r['value'], r['bound'], r['holds']])
    for r in claims['claim2']:
        rows.append(['claim2', r['m'], r['n_m'], group.format_element(r['g']), r['value'], r['bound'], r['holds']])
    if claims['claim3'] is not None:
        for r in claims['claim3']['rows']:
            rows.append(['claim3', '', r['n'], group.format_element(r['g']), r['value'], '', ''])
    writer.write_csv('kv-verify.csv', ['claim', 'm', 'n_or_tuple', 'g', 'value', 'bound', 'holds'], rows)

    conditions_ok = all(c['condition_i'] and c['condition_ii'] for c in result.conditions.values())
    monotone = None
    if claims['claim3'] is not None:
        monotone = [{'g': group.format_element(r['g']), 'non_increasing': r['non_increasing']}
                    for r in claims['claim3']['monotone']]
    report = {
        'diagnostic': 'kv-verify',
        'taus': result.schedule.taus,
        'tail': result.tail,
        'n_m': {m: result.schedule.nm(m) for m in range(1, result.schedule.depth + 1)},
        'levels': level_rows,
        'conditions_ok': conditions_ok,
        'claim1_ok': all(r['holds'] for r in claims['claim1']),
        'claim2_ok': all(r['holds'] for r in claims['claim2']),
        'claim3': None if monotone is None else {'non_increasing': monotone, 'form': claims['claim3']['form']},
        'verified_bounds': claims['ok'] and conditions_ok,
    }
    writer.write_json('kv-verify.json', report)
    return {'ok': report['verified_bounds'], 'levels': len(level_rows)}


def evaluate_relations_check(exp, writer):
    """Defining relations of F in both realizations and the kappa bridge between them."""
    cfg, group = exp.config, exp.group
    if not isinstance(group, ThompsonGroup):
        raise ConfigError('GROUP.kind', "relations-check needs thompson-unit or thompson-line, got {}".format(
            group.name))
    variants = [group.variant] + [v for v in ('unit', 'line') if v != group.variant]
    reports = [check_relations(v) for v in variants]

    rows = []
    for rep in reports:
        for c in rep['commutators']:
            rows.append([rep['variant'], 'commutator', c['relation'], c['identity'], c['element']])
        for r in rep['gamma_relations']:
            rows.append([rep['variant'], 'gamma', 'gamma_{0}^-1 gamma_{1} gamma_{0}'.format(r['m'], r['n']),
                         r['holds'], r['element']])

    bridge = []
    for x, y in KAPPA_VALUES:
        bridge.append({'check': 'kappa({})'.format(x), 'value': kappa(Dyadic.coerce(x)),
                       'holds': kappa(Dyadic.coerce(x)) == Dyadic.coerce(y)})
    points = list(cfg.DIAGNOSTIC.points) or list(KAPPA_POINTS)
    for word in ('sigma', 'tau', 'sigma^-1', 'tau^-1', 'sigma*tau^-1'):
        for x in points:
            bridge.append({'check': 'kappa({0}.{1}) = {0}.kappa({1})'.format(word, x), 'value': None,
                           'holds': equivariance_check_kappa(word, x)})
    for b in bridge:
        rows.append(['bridge', 'kappa', b['check'], b['holds'], b['value']])
    writer.write_csv('relations-check.csv', ['variant', 'kind', 'relation', 'holds', 'element'], rows)

    ok = all(rep['ok'] for rep in reports) and all(b['holds'] for b in bridge)
    writer.write_json('relations-check.json', {'diagnostic': 'relations-check', 'realizations': reports,
                                               'generators': group.describe(), 'kappa': bridge,
                                               'verified': ok})
    writer.log({'diagnostic': 'relations-check', 'ok': ok})
    return {'ok': ok, 'relations': len(rows)}


def _probe_point(space, texts, key):
    """One text per coordinate on induced spaces, or a single point text."""
    base = getattr(space, 'base', None)
    if base is not None and len(texts) > 1:
        return space.check_point([base.parse_point(t) for t in texts])
    if len(texts) != 1:
        raise ConfigError(key, "expected a single point on {}".format(space.name))
    return space.parse_point(texts[0])


def evaluate_transitivity_probe(exp, writer):
    """Search a word moving PROBE.source to PROBE.target and dump the explored orbit."""
    cfg, space, group = exp.config, exp.space, exp.group
    probe_cfg = cfg.DIAGNOSTIC.PROBE
    if not probe_cfg.source or not probe_cfg.target:
        raise ConfigError('DIAGNOSTIC.PROBE', "source and target points are required")
    source = _probe_point(space, probe_cfg.source, 'DIAGNOSTIC.PROBE.source')
    target = _probe_point(space, probe_cfg.target, 'DIAGNOSTIC.PROBE.target')
    cap = cfg.NUMERIC.search_cap

    probe = strong_transitivity_probe(space, source, target, probe_cfg.depth, cap)
    gap = orbit_gap(space, exp.action_metric, source, target, cap=min(cap, 1000))
    orbit = orbit_bfs(space, source, cap=min(cap, 1000))
    writer.write_csv('transitivity-probe.csv', ['layer', 'point'], orbit_rows(space, orbit))

    mu, info = _measure(exp, writer)
    inverses = [group.inv(g) for g in group.base_generators()]
    semigroup = nondegeneracy_probe(mu, group, probe_cfg.depth, targets=inverses)
    semigroup.pop('elements')
    if probe.found:
        reading = 'found'
    else:
        reading = 'truncated' if probe.truncated else 'not found within depth'
    report = {
        'diagnostic': 'transitivity-probe',
        'space': space.name,
        'source': space.format_point(source),
        'target': space.format_point(target),
        'probe': {'found': probe.found, 'word': probe.word.format(list(group.gen_names)) if probe.found else None,
                  'explored': probe.explored, 'truncated': probe.truncated, 'depth': probe.depth,
                  'reading': reading},
        'orbit_gap': {'upper_bound': gap.upper_bound,
                      'witness': None if gap.witness is None else space.format_point(gap.witness),
                      'explored': gap.explored, 'truncated': gap.truncated},
        'orbit': {'points': len(orbit.points), 'truncated': orbit.truncated},
        'measure': info,
        'semigroup': semigroup,
    }
    writer.write_json('transitivity-probe.json', report)
    writer.log({'diagnostic': 'transitivity-probe', 'found': probe.found, 'explored': probe.explored})
    return {'ok': True, 'found': probe.found}


DIAGNOSTIC_RUNNERS = {
    'deficiency-profile': evaluate_deficiency_profile,
    'liouville-scan': evaluate_liouville_scan,
    'pi-iterate': evaluate_pi_iterate,
    'poisson-product': evaluate_poisson_product,
    'kv-verify': evaluate_kv_verify,
    'relations-check': evaluate_relations_check,
    'transitivity-probe': evaluate_transitivity_probe,
}

DIAGNOSTIC_KNOBS = {
    'deficiency-profile': ['MEASURE', 'METRIC', 'DUAL_NORM', 'NUMERIC.n_max', 'NUMERIC.prune', 'DIAGNOSTIC.elements',
                           'DIAGNOSTIC.cesaro'],
    'liouville-scan': ['ACTION', 'MEASURE', 'DIAGNOSTIC.FUNCTIONS', 'DIAGNOSTIC.points', 'DIAGNOSTIC.sample_range',
                       'NUMERIC.exact_support_cap', 'NUMERIC.trials', 'NUMERIC.seed'],
    'pi-iterate': ['MEASURE', 'DIAGNOSTIC.FUNCTIONS', 'DIAGNOSTIC.points', 'NUMERIC.tol'],
    'poisson-product': ['MEASURE', 'DIAGNOSTIC.FUNCTIONS', 'DIAGNOSTIC.points', 'NUMERIC.tol'],
    'kv-verify': ['KV', 'METRIC', 'NUMERIC.product_cap'],
    'relations-check': ['GROUP.kind', 'DIAGNOSTIC.points'],
    'transitivity-probe': ['ACTION', 'DIAGNOSTIC.PROBE', 'NUMERIC.search_cap'],
}


def getDiagnostic(name):
    if name not in DIAGNOSTIC_RUNNERS:
        raise KeyError("unknown diagnostic {!r}; valid: {}".format(name, sorted(DIAGNOSTIC_RUNNERS)))
    return DIAGNOSTIC_RUNNERS[name]


def describe_diagnostic(name, config):
    runner = getDiagnostic(name)
    knobs = {}
    for key in DIAGNOSTIC_KNOBS[name]:
        node = config
        for part in key.split('.'):
            node = node[part]
        knobs[key] = node
    return {'name': name, 'summary': runner.__doc__.strip().splitlines()[0], 'defaults': knobs}
