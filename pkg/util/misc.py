# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
# Modified from Obj2Seq (https://github.com/CASIA-IVA-Lab/Obj2Seq)
# Modified from DETR (https://github.com/facebookresearch/detr)
# Copyright (c) Facebook, Inc. and its affiliates. All Rights Reserved
# ------------------------------------------------------------------------
"""
Misc helpers: smoothed meters, the console progress logger, mergeable
running moments and the git state for run records.
"""
import os
import subprocess
import time
import datetime
from collections import defaultdict, deque
from fractions import Fraction

import numpy as np


class SmoothedValue(object):
    """Latest value, window median and series average of a diagnostic.

    Sums are kept in the values' own type, so exact-mode meters
    average without rounding; only display goes through float.
    """

    def __init__(self, window_size=20, fmt=None):
        if fmt is None:
            fmt = "{value:.6f} (avg {global_avg:.6f})"
        self.window = deque(maxlen=window_size)
        self.total = 0
        self.count = 0
        self.fmt = fmt

    def update(self, value, n=1):
        if not isinstance(value, (int, float, Fraction)):
            raise TypeError("meter value must be a number, got {!r}".format(value))
        self.window.append(value)
        self.count += n
        self.total += value * n

    @property
    def median(self):
        return float(np.median(np.array([float(v) for v in self.window])))

    @property
    def global_avg(self):
        if not self.count:
            return 0.0
        avg = self.total / self.count
        return float(avg)

    @property
    def exact_avg(self):
        return Fraction(self.total) / self.count if self.count else Fraction(0)

    @property
    def max(self):
        return float(max(self.window))

    @property
    def value(self):
        return float(self.window[-1])

    def __str__(self):
        return self.fmt.format(median=self.median, global_avg=self.global_avg, max=self.max, value=self.value)


class MetricLogger(object):
    def __init__(self, delimiter="\t"):
        self.meters = defaultdict(SmoothedValue)
        self.delimiter = delimiter

    def update(self, **kwargs):
        for k, v in kwargs.items():
            self.meters[k].update(v)

    def __getattr__(self, attr):
        meters = self.__dict__.get('meters', {})
        if attr in meters:
            return meters[attr]
        raise AttributeError("'{}' object has no attribute '{}'".format(type(self).__name__, attr))

    def __str__(self):
        return self.delimiter.join("{}: {}".format(name, meter)
                                   for name, meter in self.meters.items() if meter.count)

    def add_meter(self, name, meter):
        self.meters[name] = meter

    def log_every(self, iterable, print_freq, header=None, total=None):
        """Yield from `iterable`, printing meters every `print_freq` steps.

        `total` is needed for generators (power streams have no length).
        """
        header = header or ''
        total = max(len(iterable) if total is None else total, 1)
        width = len(str(total))
        step_time = SmoothedValue(fmt='{global_avg:.4f}')
        start = last = time.time()
        i = 0
        for obj in iterable:
            yield obj
            now = time.time()
            step_time.update(now - last)
            last = now
            if i % print_freq == 0 or i == total - 1:
                eta = datetime.timedelta(seconds=int(step_time.global_avg * max(total - i - 1, 0)))
                print(self.delimiter.join([header, '[{:{w}d}/{}]'.format(i, total, w=width),
                                           'eta: {}'.format(eta), str(self), 's/step: {}'.format(step_time)]))
            i += 1
        elapsed = time.time() - start
        print('{} Total time: {} ({:.4f} s / step)'.format(
            header, datetime.timedelta(seconds=int(elapsed)), elapsed / max(i, 1)))


class RunningMoments(object):
    """Count, mean and sum of squared deviations; `merge` combines two
    accumulators exactly as if their samples had been pooled."""

    def __init__(self):
        self.count = 0
        self.mean = 0.0
        self.m2 = 0.0

    def update(self, values):
        values = np.asarray(values, dtype=np.float64)
        if values.size == 0:
            return self
        other = RunningMoments()
        other.count = int(values.size)
        other.mean = float(values.mean())
        other.m2 = float(((values - other.mean) ** 2).sum())
        return self.merge(other)

    def merge(self, other):
        if other.count == 0:
            return self
        n = self.count + other.count
        delta = other.mean - self.mean
        self.mean += delta * other.count / n
        self.m2 += other.m2 + delta * delta * self.count * other.count / n
        self.count = n
        return self

    @property
    def variance(self):
        return self.m2 / (self.count - 1) if self.count > 1 else 0.0

    @property
    def stderr(self):
        return (self.variance / self.count) ** 0.5 if self.count else 0.0


def get_sha():
    cwd = os.path.dirname(os.path.abspath(__file__))

    def _run(command):
        return subprocess.check_output(command, cwd=cwd, stderr=subprocess.DEVNULL).decode('ascii').strip()
    sha = 'N/A'
    diff = "clean"
    branch = 'N/A'
    try:
        sha = _run(['git', 'rev-parse', 'HEAD'])
        subprocess.check_output(['git', 'diff'], cwd=cwd, stderr=subprocess.DEVNULL)
        diff = _run(['git', 'diff-index', 'HEAD'])
        diff = "has uncommited changes" if diff else "clean"
        branch = _run(['git', 'rev-parse', '--abbrev-ref', 'HEAD'])
    except Exception:
        pass
    message = f"sha: {sha}, status: {diff}, branch: {branch}"
    return message
