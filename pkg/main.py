# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
# Modified from Obj2Seq (https://github.com/CASIA-IVA-Lab/Obj2Seq)
# Modified from DETR (https://github.com/facebookresearch/detr)
# Copyright (c) Facebook, Inc. and its affiliates. All Rights Reserved
# ------------------------------------------------------------------------
import os
import sys
import json
import time
import argparse
import datetime

import yaml

import util.misc as utils
from config import DIAGNOSTICS, GROUP_KINDS, _C, dump_manifest, get_config
from engine import build_experiment, describe_diagnostic, getDiagnostic
from groups import build_group
from kv import ORACLES
from dualnorm import WordMetric
from util import __version__
from util.errors import CapExceededError, ConfigError, VerificationError, WalkbenchError
from util.io import ArtifactWriter, to_jsonable

LIST_KINDS = ('groups', 'oracles', 'diagnostics')


def get_args_parser():
    parser = argparse.ArgumentParser('walkbench', add_help=False)
    parser.add_argument('command', choices=['run', 'validate', 'list', 'describe'])
    parser.add_argument('target', nargs='?', default=None,
                        help="list: groups | oracles | diagnostics; describe: a registered name")
    parser.add_argument('--output_dir', default=os.environ.get('WALKBENCH_OUTPUT_DIR', 'output'),
                        help='where artifacts are written; defaults to $WALKBENCH_OUTPUT_DIR')
    parser.add_argument('--seed', default=None, type=int, help='overrides NUMERIC.seed')
    parser.add_argument('--num_workers', default=None, type=int, help='overrides NUMERIC.num_workers')
    # config file
    parser.add_argument('--cfg', type=str, default=None)
    parser.add_argument(
        "--opts",
        help="Modify config options by adding 'KEY VALUE' pairs. ",
        default=None,
        nargs='+',
    )
    return parser


def _default_group(kind):
    node = _C.GROUP.clone()
    node.defrost()
    node.kind = kind
    return build_group(node)


def registry():
    """name -> (section, describe callable)."""
    entries = {}
    for kind in GROUP_KINDS:
        entries[kind] = ('groups', lambda kind=kind: _default_group(kind).describe())
    for name, cls in ORACLES.items():
        group = _default_group('lattice' if name == 'box' else 'cyclic')
        entries[name] = ('oracles', lambda cls=cls, group=group: cls(group, WordMetric(group)).describe())
    for name in DIAGNOSTICS:
        entries[name] = ('diagnostics', lambda name=name: describe_diagnostic(name, _C))
    return entries


def list_command(args):
    entries = registry()
    kinds = [args.target] if args.target else list(LIST_KINDS)
    for kind in kinds:
        if kind not in LIST_KINDS:
            raise KeyError("unknown listing {!r}; valid: {}".format(kind, list(LIST_KINDS)))
        names = [name for name, (section, _) in entries.items() if section == kind]
        print('{} ({}):'.format(kind, len(names)))
        for name in names:
            print('  ' + name)


def describe_command(args):
    entries = registry()
    if args.target not in entries:
        raise KeyError("unknown name {!r}; valid: {}".format(args.target, sorted(entries)))
    _, describe = entries[args.target]
    print(json.dumps(to_jsonable(describe()), sort_keys=True, indent=2))


def main(args, config):
    print("git:\n  {}\n".format(utils.get_sha()))
    exp = build_experiment(config)
    writer = ArtifactWriter(args.output_dir)
    writer.reset_log()
    writer.write_text('manifest.yaml', dump_manifest(config))
    writer.write_json('run_info.json', {
        'version': __version__,
        'git': utils.get_sha(),
        'cfg': args.cfg,
        'overrides': list(args.opts or []),
        'diagnostic': config.DIAGNOSTIC.name,
        'weight_mode': config.NUMERIC.weight_mode,
    })

    evaluate = getDiagnostic(config.DIAGNOSTIC.name)
    print("Start {}".format(config.DIAGNOSTIC.name))
    print(args.output_dir)
    start_time = time.time()
    stats = evaluate(exp, writer)
    print("Averaged stats:", {k: v for k, v in to_jsonable(stats).items()})
    total_time = time.time() - start_time
    total_time_str = str(datetime.timedelta(seconds=int(total_time)))
    print('Run time {}'.format(total_time_str))
    if not stats.get('ok', True):
        raise VerificationError("{}: a checked bound was violated, see {}".format(
            config.DIAGNOSTIC.name, args.output_dir))
    return stats


def cli(argv=None):
    parser = argparse.ArgumentParser('walkbench random-walk experiments', parents=[get_args_parser()])
    args = parser.parse_args(argv)
    try:
        if args.command == 'list':
            list_command(args)
            return 0
        if args.command == 'describe':
            describe_command(args)
            return 0
        if not args.cfg and not args.opts:
            raise ConfigError('--cfg', "a config file or --opts is required for {}".format(args.command))
        config = get_config(args)
        if args.command == 'validate':
            build_experiment(config)
            print("config OK: {}".format(config.DIAGNOSTIC.name))
            return 0
        main(args, config)
        return 0
    except (yaml.YAMLError, OSError) as err:
        print("config error: {}".format(err), file=sys.stderr)
        return ConfigError.exit_code
    except KeyError as err:
        # unknown config keys or registry names
        print("error: {}".format(err.args[0] if err.args else err), file=sys.stderr)
        return ConfigError.exit_code
    except CapExceededError as err:
        print("cap exceeded: {}".format(err), file=sys.stderr)
        return err.exit_code
    except VerificationError as err:
        print("verification failed: {}".format(err), file=sys.stderr)
        return err.exit_code
    except WalkbenchError as err:
        print("error: {}".format(err), file=sys.stderr)
        return err.exit_code
    except ValueError as err:
        # yacs type mismatches and unsupported kinds from the builders
        print("config error: {}".format(err), file=sys.stderr)
        return ConfigError.exit_code


if __name__ == '__main__':
    sys.exit(cli())
