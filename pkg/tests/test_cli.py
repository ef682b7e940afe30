# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
import io
import os
import sys
import json
import argparse
import tempfile
from contextlib import redirect_stdout

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

import yaml  # noqa: E402

from config import get_config  # noqa: E402
from main import cli  # noqa: E402


def _cfg(name):
    return os.path.join(ROOT, 'configs', name)


def _read(path):
    with open(path, 'rb') as f:
        return f.read()


def _quiet(argv):
    out = io.StringIO()
    with redirect_stdout(out):
        code = cli(argv)
    return code, out.getvalue()


def test_list_and_describe():
    code, out = _quiet(['list', 'diagnostics'])
    assert code == 0
    assert 'diagnostics (7):' in out
    assert '  transitivity-probe' in out
    code, out = _quiet(['describe', 'box'])
    assert code == 0
    assert json.loads(out)['max_side'] == 401
    code, out = _quiet(['describe', 'liouville-scan'])
    assert json.loads(out)['defaults']['NUMERIC.trials'] == 0
    assert _quiet(['describe', 'no-such-thing'])[0] == 2
    assert _quiet(['list', 'colours'])[0] == 2


def test_config_errors_exit_2():
    assert _quiet(['validate', '--cfg', _cfg('deficiency_z_lazy.yaml')])[0] == 0
    assert _quiet(['validate', '--opts', 'NUMERIC.no_such_key', '1'])[0] == 2
    assert _quiet(['validate', '--opts', 'NUMERIC.weight_mode', 'decimal'])[0] == 2
    assert _quiet(['validate', '--opts', 'NUMERIC.tol', 'tiny'])[0] == 2
    assert _quiet(['validate', '--cfg', _cfg('missing.yaml')])[0] == 2
    assert _quiet(['validate'])[0] == 2
    with tempfile.TemporaryDirectory() as tmp:
        # relations-check on a lattice
        argv = ['run', '--output_dir', tmp, '--opts', 'DIAGNOSTIC.name', 'relations-check']
        assert _quiet(argv)[0] == 2


def test_every_shipped_config_validates():
    names = sorted(n for n in os.listdir(os.path.join(ROOT, 'configs')) if n.endswith('.yaml'))
    assert len(names) > 10
    for name in names:
        if name == 'walk_base.yaml':
            continue
        code, out = _quiet(['validate', '--cfg', _cfg(name)])
        assert code == 0, name
        assert 'config OK:' in out


def test_exact_keys_keep_their_text():
    argv = ['validate', '--cfg', _cfg('liouville_z_window.yaml'),
            '--opts', 'NUMERIC.prune', '0', 'DIAGNOSTIC.FUNCTIONS.radius', '4']
    assert _quiet(argv)[0] == 0
    assert _quiet(['validate', '--cfg', _cfg('liouville_z_window.yaml'), '--opts', 'NUMERIC.prune'])[0] == 2
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'unquoted.yaml')
        with open(path, 'w') as f:
            f.write("BASE: ['{}']\n".format(_cfg('liouville_z_window.yaml')))
            f.write("NUMERIC:\n  prune: 0\nDIAGNOSTIC:\n  FUNCTIONS:\n    radius: 10\n")
        assert _quiet(['validate', '--cfg', path])[0] == 0
        args = argparse.Namespace(cfg=path, opts=None, seed=None, num_workers=None)
        with redirect_stdout(io.StringIO()):
            config = get_config(args)
        assert config.DIAGNOSTIC.FUNCTIONS.radius == '10'
        assert config.NUMERIC.prune == '0'


def test_thompson_configs_use_displacement():
    for name in ('liouville_thompson_line.yaml', 'liouville_thompson_pairs.yaml',
                 'relations_thompson_unit.yaml', 'transitivity_thompson_pairs.yaml'):
        args = argparse.Namespace(cfg=_cfg(name), opts=None, seed=None, num_workers=None)
        with redirect_stdout(io.StringIO()):
            config = get_config(args)
        assert config.METRIC.kind in ('auto', 'displacement'), name
        argv = ['validate', '--cfg', _cfg(name), '--opts', 'METRIC.kind', 'word']
        assert _quiet(argv)[0] == 2, name
    with tempfile.TemporaryDirectory() as tmp:
        argv = ['run', '--output_dir', tmp, '--opts', 'GROUP.kind', 'thompson-line',
                'DIAGNOSTIC.name', 'relations-check']
        assert _quiet(argv)[0] == 0


def test_relations_check_run():
    with tempfile.TemporaryDirectory() as tmp:
        code, out = _quiet(['run', '--cfg', _cfg('relations_thompson_unit.yaml'), '--output_dir', tmp])
        assert code == 0
        assert 'Averaged stats:' in out
        for name in ('manifest.yaml', 'run_info.json', 'relations-check.csv', 'relations-check.json', 'log.txt'):
            assert os.path.exists(os.path.join(tmp, name)), name
        with open(os.path.join(tmp, 'relations-check.json')) as f:
            report = json.load(f)
        assert report['verified'] is True
        assert [r['variant'] for r in report['realizations']] == ['unit', 'line']
        with open(os.path.join(tmp, 'relations-check.csv')) as f:
            header = f.readline().strip().split(',')
        assert header == ['variant', 'kind', 'relation', 'holds', 'element', 'mode']


def test_cap_exceeded_exit_3():
    with tempfile.TemporaryDirectory() as tmp:
        argv = ['run', '--cfg', _cfg('kv_verify_z.yaml'), '--output_dir', tmp, '--opts', 'KV.max_side', '5']
        assert _quiet(argv)[0] == 3


def test_transitivity_probe_run():
    with tempfile.TemporaryDirectory() as tmp:
        argv = ['run', '--cfg', _cfg('transitivity_thompson_pairs.yaml'), '--output_dir', tmp,
                '--opts', 'DIAGNOSTIC.PROBE.depth', '6']
        assert _quiet(argv)[0] == 0
        with open(os.path.join(tmp, 'transitivity-probe.json')) as f:
            report = json.load(f)
        assert report['probe']['found'] is True
        assert report['source'] == '(0;1)'
        assert report['semigroup']['reached'] > 4


def test_artifacts_independent_of_workers_and_replayable():
    with tempfile.TemporaryDirectory() as tmp:
        dirs = [os.path.join(tmp, name) for name in ('w1', 'w4', 'replay')]
        cfg = _cfg('deficiency_z_lazy.yaml')
        assert _quiet(['run', '--cfg', cfg, '--output_dir', dirs[0], '--num_workers', '1'])[0] == 0
        assert _quiet(['run', '--cfg', cfg, '--output_dir', dirs[1], '--num_workers', '4'])[0] == 0
        names = sorted(os.listdir(dirs[0]))
        assert names == sorted(os.listdir(dirs[1]))
        assert 'deficiency-profile.csv' in names and 'mu.txt' in names
        for name in names:
            if name == 'manifest.yaml':
                continue
            assert _read(os.path.join(dirs[0], name)) == _read(os.path.join(dirs[1], name)), name

        manifest = os.path.join(dirs[0], 'manifest.yaml')
        with open(manifest) as f:
            # replays from its own directory, without the config tree
            assert yaml.safe_load(f)['BASE'] == ['']
        assert _quiet(['run', '--cfg', manifest, '--output_dir', dirs[2]])[0] == 0
        assert _read(manifest) == _read(os.path.join(dirs[2], 'manifest.yaml'))
        for name in ('deficiency-profile.csv', 'deficiency-profile.json', 'mu.txt', 'log.txt'):
            assert _read(os.path.join(dirs[0], name)) == _read(os.path.join(dirs[2], name)), name


if __name__ == "__main__":
    test_list_and_describe()
    test_config_errors_exit_2()
    test_every_shipped_config_validates()
    test_exact_keys_keep_their_text()
    test_thompson_configs_use_displacement()
    test_relations_check_run()
    test_cap_exceeded_exit_3()
    test_transitivity_probe_run()
    test_artifacts_independent_of_workers_and_replayable()
    print("OK\n")
