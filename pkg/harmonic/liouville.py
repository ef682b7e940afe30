# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Liouville scans: oscillation max - min of (P_mu)^n f over a finite sample.

Decay toward 0 for a Lipschitz family is evidence that bounded harmonic
functions are constant; a positive floor is counter-evidence. The sample
is finite, so every oscillation is a lower bound of the true one.

The exact phase uses convolution powers (P_mu)^n = P_{mu^n}. Once the power
support passes `exact_support_cap`, the scan switches to Monte Carlo if
trials > 0, and stops with `truncated` set otherwise.
"""
from exact.weights import weight_tolerance
from measures.convolution import iter_convolution_powers
from util.errors import CapExceededError
from .montecarlo import StepSampler, WalkConfig, empirical_action_profile
from .transfer import transfer_on_action


class LiouvilleScan(object):

    def __init__(self, functions, sample):
        self.functions = list(functions)
        self.sample = list(sample)
        self.rows = []
        self.exact_until = 0
        self.truncated = False

    def add(self, n, fi, values, phase, pruned=None, stderr=None):
        hi, lo = max(values), min(values)
        self.rows.append({'n': n, 'function': self.functions[fi].name, 'oscillation': hi - lo,
                          'max': hi, 'min': lo, 'phase': phase, 'pruned': pruned, 'stderr': stderr})

    def series(self, name, phase=None):
        return [(r['n'], r['oscillation']) for r in self.rows
                if r['function'] == name and (phase is None or r['phase'] == phase)]

    def monotone(self, name, strict=False):
        """Exact-phase oscillation never increases (strictly decreases with strict=True)."""
        tol = weight_tolerance()
        values = [v for _, v in self.series(name, 'exact')]
        if strict:
            return all(b < a for a, b in zip(values, values[1:]))
        return all(b <= a + tol for a, b in zip(values, values[1:]))

    def verdicts(self):
        out = []
        for f in self.functions:
            series = self.series(f.name)
            first = series[0][1] if series else None
            last = series[-1][1] if series else None
            if last is None or len(series) < 2 and last != 0:
                reading = 'inconclusive'
            elif last == 0 or last <= first / 2:
                reading = 'evidence'
            else:
                reading = 'counter-evidence'
            out.append({'function': f.name, 'first_oscillation': first, 'last_oscillation': last,
                        'non_increasing_exact': self.monotone(f.name), 'reading': reading,
                        'truncated': self.truncated})
        return out


def liouville_scan(space, mu, functions, sample, n_max, record=None, threshold=0, exact_support_cap=None,
                   trials=0, seed=0, chunk_size=256, num_workers=1, on_step=None):
    """Oscillation table for n in `record` (every n if empty) up to n_max."""
    marks = sorted(set(n for n in record if 1 <= n <= n_max)) if record else list(range(1, n_max + 1))
    wanted = set(marks)
    scan = LiouvilleScan(functions, sample)
    try:
        for step in iter_convolution_powers(mu, space.group, n_max, threshold, emit=lambda n: n in wanted,
                                            support_cap=exact_support_cap, num_workers=num_workers):
            for fi, f in enumerate(scan.functions):
                values = [transfer_on_action(step.measure, f, x, space) for x in scan.sample]
                scan.add(step.n, fi, values, 'exact', pruned=step.pruned)
            scan.exact_until = step.n
            if on_step is not None:
                on_step(step.n, 'exact')
    except CapExceededError as err:
        scan.truncated = True
        remaining = [n for n in marks if n >= err.level]
        if trials > 0 and remaining:
            cfg = WalkConfig(StepSampler(mu), remaining[-1], trials, seed, chunk_size, num_workers)
            per_point = [empirical_action_profile(cfg, scan.functions, x, space, remaining) for x in scan.sample]
            for n in remaining:
                for fi in range(len(scan.functions)):
                    ests = [est[(n, fi)] for est in per_point]
                    scan.add(n, fi, [e.mean for e in ests], 'monte-carlo',
                             pruned=ests[0].bias_bound, stderr=max(e.stderr for e in ests))
                if on_step is not None:
                    on_step(n, 'monte-carlo')
            scan.truncated = False
    return scan
