# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Finitely supported measures over any hashable point type.

Atoms live in an insertion-ordered dict; every iteration that feeds an
artifact goes through it (or through `sorted_items`), never through a set.
A FinMeasure has total mass <= 1; the missing mass is its deficiency, i.e.
what pruning or truncation removed.
"""
from exact.weights import as_weight, weight_tolerance, is_exact
from util.errors import DomainError


class _AtomMap(object):
    __slots__ = ('atoms', '_mass')

    @classmethod
    def _trusted(cls, atoms):
        obj = cls.__new__(cls)
        obj.atoms = atoms
        obj._mass = None
        return obj

    def __len__(self):
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __contains__(self, x):
        return x in self.atoms

    def __getitem__(self, x):
        return self.atoms.get(x, 0)

    def weight(self, x):
        return self.atoms.get(x, as_weight(0))

    @property
    def support(self):
        return list(self.atoms)

    def items(self):
        return self.atoms.items()

    def sorted_items(self, key=None):
        return sorted(self.atoms.items(), key=(lambda kv: key(kv[0])) if key else None)

    def integrate(self, f):
        total = as_weight(0)
        for x, w in self.atoms.items():
            total += w * f(x)
        return total

    def __eq__(self, other):
        return type(self) is type(other) and self.atoms == other.atoms

    __hash__ = None

    def __repr__(self):
        body = ', '.join('{!r}: {}'.format(x, w) for x, w in list(self.atoms.items())[:6])
        more = ', ...' if len(self.atoms) > 6 else ''
        return '{}({{{}{}}})'.format(type(self).__name__, body, more)


def _collect(atoms, signed):
    items = atoms.items() if isinstance(atoms, dict) else atoms
    out = {}
    for x, w in items:
        w = as_weight(w)
        if w < 0 and not signed:
            raise DomainError("negative weight {} at {!r}".format(w, x))
        out[x] = out.get(x, 0) + w
    return {x: w for x, w in out.items() if w != 0}


class FinMeasure(_AtomMap):
    """Non-negative finitely supported measure with mass <= 1."""
    __slots__ = ()

    def __init__(self, atoms=()):
        self.atoms = _collect(atoms, signed=False)
        self._mass = None
        if self.mass > 1 + weight_tolerance():
            raise DomainError("total mass {} exceeds 1".format(self.mass))

    @property
    def mass(self):
        if self._mass is None:
            self._mass = sum(self.atoms.values(), as_weight(0))
        return self._mass

    @property
    def deficiency(self):
        return as_weight(1) - self.mass

    def map(self, fn):
        """Pushforward along fn; colliding images are merged."""
        out = {}
        for x, w in self.atoms.items():
            y = fn(x)
            out[y] = out.get(y, 0) + w
        return FinMeasure._trusted({y: w for y, w in out.items() if w != 0})

    def scale(self, t):
        t = as_weight(t)
        if t < 0:
            raise DomainError("negative scale {}".format(t))
        if t == 0:
            return FinMeasure._trusted({})
        return FinMeasure._trusted({x: w * t for x, w in self.atoms.items()})

    def normalized(self):
        m = self.mass
        if m == 0:
            raise DomainError("cannot normalize the zero measure")
        return FinMeasure._trusted({x: w / m for x, w in self.atoms.items()})

    def as_signed(self):
        return SignedFinMeasure._trusted(dict(self.atoms))


class SignedFinMeasure(_AtomMap):
    """Signed finitely supported measure without zero atoms."""
    __slots__ = ()

    def __init__(self, atoms=()):
        self.atoms = _collect(atoms, signed=True)
        self._mass = None

    @property
    def total(self):
        return sum(self.atoms.values(), as_weight(0))

    @property
    def total_variation(self):
        return sum((abs(w) for w in self.atoms.values()), as_weight(0))

    def __add__(self, other):
        out = dict(self.atoms)
        for x, w in other.items():
            out[x] = out.get(x, 0) + w
        return SignedFinMeasure._trusted({x: w for x, w in out.items() if w != 0})

    def __neg__(self):
        return SignedFinMeasure._trusted({x: -w for x, w in self.atoms.items()})

    def __sub__(self, other):
        return self + (-other.as_signed() if isinstance(other, FinMeasure) else -other)

    def scale(self, t):
        t = as_weight(t)
        if t == 0:
            return SignedFinMeasure._trusted({})
        return SignedFinMeasure._trusted({x: w * t for x, w in self.atoms.items()})

    def as_signed(self):
        return self


def dirac(x):
    return FinMeasure._trusted({x: as_weight(1)})


def uniform(points):
    points = list(dict.fromkeys(points))
    if not points:
        raise DomainError("uniform measure needs a non-empty set")
    w = as_weight(1) / len(points)
    return FinMeasure._trusted({x: w for x in points})


def mixture(weights, parts):
    """sum_i weights[i] * parts[i]; the unassigned weight 1 - sum shows up as deficiency."""
    weights = [as_weight(w) for w in weights]
    if len(weights) != len(parts):
        raise DomainError("mixture needs one weight per part ({} != {})".format(len(weights), len(parts)))
    for w in weights:
        if w < 0:
            raise DomainError("negative mixture weight {}".format(w))
    if sum(weights, as_weight(0)) > 1 + weight_tolerance():
        raise DomainError("mixture weights sum to more than 1")
    out = {}
    for t, part in zip(weights, parts):
        if t == 0:
            continue
        for x, w in part.items():
            out[x] = out.get(x, 0) + t * w
    return FinMeasure._trusted({x: w for x, w in out.items() if w != 0})


def support_mix(mu, points, alpha):
    """(1 - alpha) mu + alpha * uniform(points); puts every point of `points` in the support."""
    alpha = as_weight(alpha)
    if not 0 < alpha <= 1:
        raise DomainError("mixing weight must lie in (0, 1], got {}".format(alpha))
    return mixture([1 - alpha, alpha], [mu, uniform(points)])


def tv_distance(mu, nu):
    keys = list(mu.atoms) + [x for x in nu.atoms if x not in mu.atoms]
    total = sum((abs(mu[x] - nu[x]) for x in keys), as_weight(0))
    return total / 2


def sub(mu, nu):
    return mu.as_signed() - nu


def pushforward(mu, fn):
    return mu.map(fn)


def weights_close(a, b):
    if is_exact():
        return a == b
    return abs(a - b) <= weight_tolerance()
