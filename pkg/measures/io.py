# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Measure files: '#'-prefixed header lines, then one atom per line as
"point<TAB>weight". Atoms are sorted by their point text.
"""
from exact.weights import format_weight, get_weight_mode, as_weight
from util.errors import ParseError
from .measure import FinMeasure

HEADER = '# walkbench measure'


def measure_lines(mu, format_point, carrier, extra=None):
    lines = [HEADER,
             '# carrier: {}'.format(carrier),
             '# mode: {}'.format(get_weight_mode()),
             '# atoms: {}'.format(len(mu)),
             '# deficiency: {}'.format(format_weight(mu.deficiency))]
    for key, value in (extra or {}).items():
        lines.append('# {}: {}'.format(key, value))
    rows = sorted((format_point(x), format_weight(w)) for x, w in mu.items())
    lines.extend('{}\t{}'.format(p, w) for p, w in rows)
    return lines


def write_measure(path, mu, format_point, carrier, extra=None):
    with open(path, 'w') as f:
        f.write('\n'.join(measure_lines(mu, format_point, carrier, extra)) + '\n')


def read_measure(path, parse_point):
    """Returns (FinMeasure, header dict)."""
    header, atoms = {}, []
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            line = line.rstrip('\n')
            if not line.strip():
                continue
            if line.startswith('#'):
                key, sep, value = line[1:].partition(':')
                if sep:
                    header[key.strip()] = value.strip()
                continue
            parts = line.split('\t')
            if len(parts) != 2:
                raise ParseError("{}:{}: expected 'point<TAB>weight', got {!r}".format(path, lineno, line))
            atoms.append((parse_point(parts[0]), as_weight(parts[1])))
    return FinMeasure(atoms), header
