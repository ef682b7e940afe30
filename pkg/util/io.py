# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Artifact writer for a run directory.

CSV cells hold exact fraction strings in exact mode and decimals in float
mode; every CSV carries a trailing `mode` column. JSON is written with
sorted keys. Nothing written here contains timings.
"""
import csv
import json
import os
from fractions import Fraction

from exact.dyadic import Dyadic
from exact.weights import format_weight, get_weight_mode


def format_cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (Fraction, float, int)):
        return format_weight(value)
    if isinstance(value, Dyadic):
        return str(value)
    if isinstance(value, (list, tuple)):
        return ' '.join(format_cell(v) for v in value)
    if hasattr(value, 'to_text'):
        return value.to_text()
    return str(value)


def to_jsonable(obj):
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return format_weight(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, str) else k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    return format_cell(obj)


class ArtifactWriter(object):
    """Single writer for one output directory."""

    def __init__(self, output_dir):
        self.output_dir = output_dir
        if output_dir:
            os.makedirs(output_dir, exist_ok=True)

    def path(self, name):
        return os.path.join(self.output_dir, name)

    def write_csv(self, name, header, rows):
        mode = get_weight_mode()
        with open(self.path(name), 'w', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(list(header) + ['mode'])
            for row in rows:
                writer.writerow([format_cell(v) for v in row] + [mode])
        return self.path(name)

    def write_json(self, name, obj):
        with open(self.path(name), 'w') as f:
            f.write(json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + '\n')
        return self.path(name)

    def write_text(self, name, text):
        with open(self.path(name), 'w') as f:
            f.write(text)
        return self.path(name)

    def log(self, stats):
        with open(self.path('log.txt'), 'a') as f:
            f.write(json.dumps(to_jsonable(stats), sort_keys=True) + '\n')

    def reset_log(self):
        with open(self.path('log.txt'), 'w'):
            pass
