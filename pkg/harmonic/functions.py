# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Bounded test functions on groups and on action spaces.

Every function is a named callable returning a weight of the current mode.
Lipschitz families are built from anchors with the McShane formula

    F(x) = min( min_s (f(s) + lip * d(s, x)), cap ),

which extends lip-compatible anchor data to a function in Lip_lip^cap.
"""
from exact.weights import as_weight, weight_tolerance
from groups.free import FreeGroup
from util.errors import DomainError

FUNCTION_KINDS = ('window', 'anchors', 'clamped-identity', 'first-letter', 'last-letter', 'boundary-harmonic',
                  'constant')


class PointFunction(object):
    """A named bounded function given by a closure."""

    def __init__(self, name, fn, bound=1):
        self.name = name
        self._fn = fn
        self.bound = as_weight(bound)

    def __call__(self, x):
        return self._fn(x)

    def __repr__(self):
        return "{}({!r})".format(type(self).__name__, self.name)


class TestFunction(PointFunction):
    """McShane extension of anchor data (point, value) with constants lip and cap."""
    __test__ = False

    def __init__(self, anchors, lip, cap, metric, slack=0, name=None):
        self.anchors = [(x, as_weight(v)) for x, v in anchors]
        self.lip = as_weight(lip)
        self.cap = as_weight(cap)
        self.metric = metric
        self.slack = as_weight(slack)
        if not self.anchors:
            raise DomainError("a test function needs at least one anchor")
        self._validate()
        super().__init__(name or 'mcshane', self._evaluate, bound=self.cap)

    def _validate(self):
        tol = weight_tolerance()
        for x, v in self.anchors:
            if abs(v) > self.cap + tol:
                raise DomainError("anchor value {} at {!r} exceeds cap {}".format(v, x, self.cap))
        for k, (x, v) in enumerate(self.anchors):
            for y, w in self.anchors[k + 1:]:
                if abs(v - w) > self.lip * self.metric(x, y) + self.slack + tol:
                    raise DomainError("anchors {!r} and {!r} are not {}-Lipschitz within slack {}"
                                      .format(x, y, self.lip, self.slack))

    def _evaluate(self, x):
        best = min(v + self.lip * self.metric(s, x) for s, v in self.anchors)
        return min(best, self.cap)

    def anchor_deviation(self):
        """max |F(s) - f(s)| over anchors; at most the slack."""
        return max(abs(self(x) - v) for x, v in self.anchors)


def mcshane_extend(anchors, lip, cap, metric, slack=0, name=None):
    return TestFunction(anchors, lip, cap, metric, slack, name)


def window(center, radius, metric, name=None):
    """Tent min(d(x, center) / radius, 1)."""
    radius = as_weight(radius)
    if radius <= 0:
        raise DomainError("window radius must be positive, got {}".format(radius))
    return TestFunction([(center, 0)], 1 / radius, 1, metric, name=name or 'window')


def clamped_identity(radius, name=None):
    """x -> max(-1, min(1, x / radius)) on a one-dimensional lattice or the dyadics."""
    radius = as_weight(radius)
    one = as_weight(1)

    def fn(x):
        if isinstance(x, tuple):
            x = x[0]
        return max(-one, min(one, as_weight(x) / radius))
    return PointFunction(name or 'clamped-identity', fn)


def letter_indicator(group, letter, side='first', name=None):
    """1 when the reduced word starts (side='first') or ends (side='last') with `letter`."""
    if not isinstance(group, FreeGroup):
        raise DomainError("letter indicators need a free group, got {}".format(group.name))
    code = group.letter_code(letter)
    pick = group.first_letter if side == 'first' else group.last_letter
    one, zero = as_weight(1), as_weight(0)
    return PointFunction(name or '{}-letter-{}'.format(side, letter), lambda g: one if pick(g) == code else zero)


def free_boundary_harmonic(group, letter, name=None):
    """Probability that the right random walk from g eventually keeps first letter `letter`.

    Harmonic for the uniform measure on the symmetric generators under
    Phi f(g) = sum_s mu(s) f(g s); bounded and non-constant.
    """
    if not isinstance(group, FreeGroup):
        raise DomainError("boundary harmonic functions need a free group, got {}".format(group.name))
    code = group.letter_code(letter)
    q = as_weight(1) / (2 * group.rank - 1)
    h0 = as_weight(1) / (2 * group.rank)

    def fn(g):
        k = len(g)
        if k == 0:
            return h0
        ret = q ** k
        if g[0] == code:
            return 1 - ret * (1 - h0)
        return ret * h0
    return PointFunction(name or 'boundary-harmonic-{}'.format(letter), fn)


def constant(value, name=None):
    value = as_weight(value)
    return PointFunction(name or 'constant', lambda x: value, bound=abs(value))


def product(f1, f2):
    return PointFunction('{}*{}'.format(f1.name, f2.name), lambda x: f1(x) * f2(x), bound=f1.bound * f2.bound)


def build_functions(cfg, space, metric):
    """cfg: the DIAGNOSTIC.FUNCTIONS node; points are parsed with `space`."""
    kind = cfg.kind
    group = space.group
    if kind == 'window':
        return [window(space.parse_point(c), cfg.radius, metric, name='window({})'.format(c)) for c in cfg.centers]
    if kind == 'anchors':
        anchors = []
        for spec in cfg.anchors:
            point, value = spec.rsplit(None, 1)
            anchors.append((space.parse_point(point), value))
        return [mcshane_extend(anchors, cfg.lip, cfg.cap, metric, name='anchors')]
    if kind == 'clamped-identity':
        return [clamped_identity(cfg.radius)]
    if kind == 'first-letter':
        return [letter_indicator(group, a, 'first') for a in cfg.letters]
    if kind == 'last-letter':
        return [letter_indicator(group, a, 'last') for a in cfg.letters]
    if kind == 'boundary-harmonic':
        return [free_boundary_harmonic(group, a) for a in cfg.letters]
    if kind == 'constant':
        return [constant(cfg.cap)]
    raise ValueError(f'FUNCTIONS kind {kind} not supported')
